from enum import Enum


class Axis(Enum):
    X = 'x'
    Y = 'y'
    Z = 'z'
