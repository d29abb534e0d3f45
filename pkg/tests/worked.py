"""The weight-range [1,2], n = 6 example: injected arborescence and adjacency lists."""

from ucycle.euler import AdjacencyOrder
from ucycle.families import WeightRange
from ucycle.walk import ArborescenceMap
from ucycle.words import parse_word

FAMILY = WeightRange(2, 6, 1, 2)
ROOT = parse_word("00010")
EXPECTED = parse_word("010001010000110000010")

# vertex -> successors, tree successor last; the root lists 00100 then 00101
_LISTS = {
    "00000": ["00001"],
    "00001": ["00011", "00010"],
    "00010": ["00100", "00101"],
    "00100": ["01001", "01000"],
    "01000": ["10001", "10000"],
    "10000": ["00001", "00000"],
    "00011": ["00110"],
    "00101": ["01010"],
    "00110": ["01100"],
    "01001": ["10010"],
    "01010": ["10100"],
    "01100": ["11000"],
    "10001": ["00010"],
    "10010": ["00100"],
    "10100": ["01000"],
    "11000": ["10000"],
}


def adjacency() -> AdjacencyOrder:
    order = {parse_word(v): [int(s[-1]) for s in succ] for v, succ in _LISTS.items()}
    return AdjacencyOrder(ROOT, order)


def arborescence() -> ArborescenceMap:
    tree = {parse_word(v): int(succ[-1][-1]) for v, succ in _LISTS.items() if v != "00010"}
    return ArborescenceMap(ROOT, tree, [ROOT] + sorted(tree), 0)
