"""
apollonius Version file
"""

from importlib.metadata import version

__application__: str = "apollonius"
__version__: str = version(__application__)
