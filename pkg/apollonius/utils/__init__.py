"""
apollonius utils __init__ file
"""

from .general_utils import make_list, parse_int_list
from .logging_utils import log_apollonius, print_table
from .yaml_utils import read_yaml, yaml_file_to_manifest

__all__ = [
    "log_apollonius",
    "make_list",
    "parse_int_list",
    "print_table",
    "read_yaml",
    "yaml_file_to_manifest",
]
