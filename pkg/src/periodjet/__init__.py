"""periodjet: exact differentials of the period map of a hyperelliptic curve.

Everything is computed over Q with truncated Laurent series; no floating
point anywhere. Submodules, roughly bottom-up:

    laurent   truncated Laurent series over Q, residue pairing
    witt      vector fields z^k d/dz, differential operators, brackets
    curve     hyperelliptic curve expansions at infinity, cohomology bases
    hodge     reduction to quotient bases, the Kodaira-Spencer matrix map
    period    first/second/higher differentials of the period map
    cli       `periodjet` command line front end
"""

__version__ = "0.1.0"
