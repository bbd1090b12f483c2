from spgen.cli import main

main()
