from .derive import main

raise SystemExit(main())
