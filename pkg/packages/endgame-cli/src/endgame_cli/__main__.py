from endgame_cli.main import main

raise SystemExit(main())
