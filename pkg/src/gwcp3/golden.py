"""Published rational and elliptic Gromov-Witten invariants of CP^3, degrees 1-5.

Columns: degree, a (lines), b (points), genus-0 invariant, genus-1 invariant,
number of elliptic space curves.  Mixed numbers such as ``-36 3/4`` are
stored as improper fractions.
"""

_ROWS = """\
1  0  2  1                 -1/12                0
1  2  1  1                 -1/12                0
1  4  0  2                 -1/6                 0
2  0  4  0                 0                    0
2  2  3  1                 -1/4                 0
2  4  2  4                 -1                   0
2  6  1  18                -9/2                 0
2  8  0  92                -23                  0
3  0  6  1                 -5/12                0
3  2  5  5                 -25/12               0
3  4  4  30                -25/2                0
3  6  3  190               -469/6               1
3  8  2  1312              -1598/3              14
3  10 1  9864              -3960                150
3  12 0  80160             -31900               1500
4  0  8  4                 -4/3                 1
4  2  7  58                -179/6               4
4  4  6  480               -248                 32
4  6  5  4000              -6070/3              310
4  8  4  35104             -51772/3             3220
4  10 3  327888            -156594              34674
4  12 2  3259680           -1515824             385656
4  14 1  34382544          -15620216            4436268
4  16 0  383306880         -170763640           52832040
5  0  10 105               -147/4               42
5  2  9  1265              -2379/4              354
5  4  8  13354             -13047/2             3492
5  6  7  139098            -132549/2            38049
5  8  6  1492616           -677808              441654
5  10 5  16744080          -7179606             5378454
5  12 4  197240400         -79637976            68292324
5  14 3  2440235712        -928521900           901654884
5  16 2  31658432256       -11385660384         12358163808
5  18 1  429750191232      -146713008096        175599635328
5  20 0  6089786376960     -1984020394752       2583319387968
"""


def golden_rows():
    """Yield ``(n, a, b, N0, N1, count)`` with exact values, in table order."""
    from .exact import parse_rational

    for line in _ROWS.splitlines():
        n, a, b, g0, g1, count = line.split()
        yield (int(n), int(a), int(b), parse_rational(g0), parse_rational(g1), int(count))
