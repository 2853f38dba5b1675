"""
apollonius __main__.py CLI Wrapper
"""

from apollonius.cli import cli

if __name__ == "__main__":
    cli()
