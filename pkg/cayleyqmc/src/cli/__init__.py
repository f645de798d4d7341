from cayleyqmc.src.cli.base import RunConfig
from cayleyqmc.src.cli.base import build_parser
from cayleyqmc.src.cli.base import main
