from cayleyqmc.src.base import ForwardChain
