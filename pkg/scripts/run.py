#!/usr/bin/env python3
import sys
import logging

from cayleyqmc.settings import CAYLEYQMC_LOG_LEVEL

from cayleyqmc.src.cli import main

logging.basicConfig(level=CAYLEYQMC_LOG_LEVEL)


if __name__ == '__main__':
    sys.exit(main())
