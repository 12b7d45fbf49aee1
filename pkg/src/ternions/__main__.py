from ternions.cli import main

main()
