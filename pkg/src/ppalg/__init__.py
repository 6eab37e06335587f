"""Rigid modules over preprojective algebras of simply laced Dynkin type.

Subpackage map:

- fields, linalg: exact scalars (rationals, prime fields) and matrices
- quivers: Dynkin types, fixed orientations, doubled quivers, the Euler-style
  symmetric bilinear form
- algebras: structure-constant algebras, the preprojective quotient, modules
  over an abstract algebra, homological invariants
- reps: quiver representations of the doubled quiver satisfying the
  preprojective relations; Hom, Ext^1 (two independent routes), decomposition
- catalog: enumeration of the finitely many indecomposables, identification
- approx: minimal left approximations, exchange sequences, mutation of
  maximal rigid modules
- endo: endomorphism quiver of a rigid module, Cartan-style matrices and
  their mutation transport
- cluster: Laurent expressions, seeds, the exchange graph
- phi: flag counts over finite fields and the dual-semicanonical phi map
- cli, service: command line and HTTP front ends
"""

__version__ = "0.1.0"
