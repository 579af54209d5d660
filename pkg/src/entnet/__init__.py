"""entnet: executable combinatorics of distributed entanglement.

Simulates CAT-state preparation protocols over EPR graphs and entangled
hypergraphs, decides LOCC impossibility via bicolored merging, and runs
the multiparty key-distribution and quantum-secret-sharing constructions
built on top of them.
"""

__version__ = "0.1.0"
