"""Entry point for python -m meadowlog."""

from meadowlog.cli.app import app

if __name__ == "__main__":
    app()
