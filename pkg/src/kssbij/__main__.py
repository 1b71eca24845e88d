from kssbij.cli import main

main()
