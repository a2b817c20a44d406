"""Exact Deuring polynomials for rank-2 Drinfeld modules in Legendre form.

Everything is computed over explicitly constructed finite-field towers with
zero tolerance: Deuring polynomials by three independent routes (symbolic Ore
image, coefficient recurrence, universal-sequence reduction), the companion
lambda-form polynomial, the supersingular correspondence graph, and the
generic-characteristic tower identities.
"""

from .drinfeld import (
    DeltaModule,
    DeuringResult,
    LambdaModule,
    delta_from_lambda,
    deuring,
    deuring_H,
    deuring_g_sequence,
    deuring_h_direct,
    deuring_h_grec,
    deuring_h_universal,
    is_supersingular,
    j_invariant,
)
from .errors import (
    AmbientTooSmallError,
    CapExceededError,
    ConsistencyError,
    DomainError,
    RecurrenceBreakdownError,
)
from .fields import FieldElement, FiniteField, base_field, embed, frobenius
from .grammar import parse, render
from .isogeny_graph import (
    ComponentReport,
    IsogenyGraph,
    build_supersingular_graph,
    neighbors,
    verify_component,
)
from .laurent import LaurentRing, LaurentT
from .modulus import (
    PrimeModulus,
    primes_of_degree,
    primes_up_to_degree,
    reduce_mod_prime,
    t_poly_ring,
)
from .multipoly import Frac, MultiPoly, MultiRing
from .ore import OreContext, OrePoly, drinfeld_image, ore_apply, qpow
from .poly import (
    Poly,
    PolyRing,
    is_irreducible,
    poly_gcd,
    roots_in_extension,
    splitting_degree,
)
from .tower import (
    IdentityReport,
    all_identity_reports,
    j_chain_check,
    verify_factorization,
    verify_recursion_step,
    verify_theta_parametrization,
)
from .universal import (
    U_sequence,
    check_derivative_recursion,
    check_key_identity,
    check_simple_roots,
    check_u_zero,
    sequence_json,
    u_sequence,
    u_zero_value,
)

__version__ = "0.1.0"
