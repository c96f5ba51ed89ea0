"""Run the simplex toolkit CLI: python -m <package> or `simplex`."""

from cli.app import main

if __name__ == "__main__":
    main()
