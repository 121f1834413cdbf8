"""Run the arqkit command line from a source checkout."""
import sys

from scripts.arqkit import main

if __name__ == "__main__":
    sys.exit(main())
