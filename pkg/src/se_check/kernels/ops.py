"""Opcodes of the formula bytecode.

A formula compiles to postfix code, one ``(opcode, arg)`` row per node.
Truth values are scaled by two: 0 = false, 1 = unknown, 2 = true.  An
interpretation is a pair of bitmasks ``(pos, cons)``: atom ``i`` is 2 when
bit ``i`` of ``pos`` is set, 1 when only bit ``i`` of ``cons`` is set, else 0.
"""

ATOM = 0
TOP = 1
BOT = 2
NEG = 3  # 2 - x
AND = 4  # min
OR = 5  # max
L = 6  # 2 iff x == 2
M = 7  # 2 iff x != 0
NOT = 8  # 2 iff x == 0
IMPLIES = 9  # max(2 - x, y)
EQUIV = 10  # min(max(2 - x, y), max(2 - y, x))
ARROW_L3 = 11  # body x, head y: 2 iff x <= y, else 0
IFF = 12  # 2 iff x == y
ARROW_HT = 13  # body x, head y: 2 iff x <= y, else y

NAMES = {
    ATOM: "ATOM", TOP: "TOP", BOT: "BOT", NEG: "NEG", AND: "AND", OR: "OR",
    L: "L", M: "M", NOT: "NOT", IMPLIES: "IMPLIES", EQUIV: "EQUIV",
    ARROW_L3: "ARROW_L3", IFF: "IFF", ARROW_HT: "ARROW_HT",
}
