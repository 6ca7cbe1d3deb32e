"""octoeigen CLI entry point."""

from octoeigen.cli.main import main

if __name__ == "__main__":
    main()
