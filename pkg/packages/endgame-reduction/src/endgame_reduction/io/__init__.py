"""
endgame_reduction.io package

Contains IO-bound modules that are strictly FORBIDDEN from the pure compiler.
"""
from .loaders import load_yaml_file, load_packaged_yaml
