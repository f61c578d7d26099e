from coprime_divisor.cli import main

raise SystemExit(main())
