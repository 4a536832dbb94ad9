"""Entry point for `python -m klogic`."""

from .cli import run

if __name__ == "__main__":
    run()
