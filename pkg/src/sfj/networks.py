"""Two small bundled example networks.

Only the topology, the edge signs, and the placement of stubbornness carry
meaning; the weight magnitudes, stubbornness levels, and initial opinions are
arbitrary choices, since detection ignores them entirely.
"""

from .graph import Edge, SignedDigraph


def g1() -> SignedDigraph:
    """Six agents, stubborn {1, 2}.

    Agent 2 seals agents 3 and 4 off from the stubborn side, and agent 5
    (itself non-stubborn, fed separately by 1 and 2) seals off agent 6. The
    antagonistic edge 3 -> 2 points at a persuasive agent, so it does not
    break cooperativity. Agent 1 persuades nobody, so strict coverage fails.
    """
    return SignedDigraph(
        n=6,
        edges=(
            Edge(1, 2, 1.0),
            Edge(2, 3, 1.5),
            Edge(3, 4, 2.0),
            Edge(3, 2, -0.8),
            Edge(1, 5, 1.2),
            Edge(2, 5, 0.7),
            Edge(5, 6, 1.0),
        ),
        beta=(0.5, 0.3, 0.0, 0.0, 0.0, 0.0),
        x0=(1.0, 5.0, 2.0, 8.0, 3.0, 9.0),
    )


def g2() -> SignedDigraph:
    """Twelve agents, stubborn {7, 10}; four persuasive clusters covering everyone.

    Roots 7 and 10 are stubborn; roots 1 and 4 are non-stubborn but each is
    fed from both stubborn clusters (with some antagonistic feeds), so no
    single agent gates them. All in-edges of persuaded agents are
    cooperative, hence C1 and C2 both hold and the network settles into the
    four clusters {1,2,3}, {4,5,6}, {7,8,9}, {10,11,12}.
    """
    return SignedDigraph(
        n=12,
        edges=(
            Edge(7, 8, 1.0),
            Edge(8, 9, 2.0),
            Edge(10, 11, 1.0),
            Edge(11, 12, 1.5),
            Edge(7, 1, 2.0),
            Edge(10, 1, -1.0),
            Edge(3, 1, -0.5),
            Edge(1, 2, 1.0),
            Edge(2, 3, 2.0),
            Edge(9, 4, -1.5),
            Edge(12, 4, 2.0),
            Edge(6, 4, -1.0),
            Edge(4, 5, 1.0),
            Edge(5, 6, 0.8),
        ),
        beta=(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.4, 0.0, 0.0, 0.7, 0.0, 0.0),
        x0=(5.1, 0.9, 7.3, 2.4, 8.8, 3.5, 6.2, 1.7, 9.4, 4.6, 0.3, 7.9),
    )
