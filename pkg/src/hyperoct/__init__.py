"""hyperoct: exact arithmetic for signed permutations and the rings they act on.

Modules by topic:

* permutations  - signed permutations, signed partitions/compositions,
                  conjugacy data, class representatives and centralizers
* algebra       - the rational group algebra, descent-type idempotents,
                  the sign-forgetting projection, right-ideal characters
* characters    - irreducible characters, induction, decomposition
* rings         - the presented cohomology rings (d = 1 and d = 3) with
                  their straightening engine and group actions
* ringreps      - graded/bigraded/type characters carried by the rings
* chambers      - the finite d = 1 chamber model and pointwise oracles
* equivariant   - the circle-equivariant relation set and specializations
* suites        - named verification suites behind the `hyperoct` CLI
"""

__version__ = "0.1.0"
