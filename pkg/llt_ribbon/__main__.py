from llt_ribbon.cli.main import main

main()
