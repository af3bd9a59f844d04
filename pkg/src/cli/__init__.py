from .chain_cli import ChainCLI, main

__all__ = ['ChainCLI', 'main']
