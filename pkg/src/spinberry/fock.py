"""Minimal second-quantized operator algebra over spinful lattice fermions.

States are dictionaries mapping an occupation ket -- a tuple of spin-orbital
indices in strictly increasing order, meaning c†_{o1} c†_{o2} ... |0> -- to a
complex amplitude.  Orbitals are encoded as 2*(site-1) + spin with spin 0 = up,
1 = down, sites 1-based.

Every operator application tracks anticommutation signs explicitly, which is
the point: this module is the brute-force reference used to validate the
closed-form concurrence expressions, so it must not share their shortcuts.
"""

from __future__ import annotations

UP = 0
DOWN = 1


def orbital(site: int, spin: int) -> int:
    return 2 * (site - 1) + spin


def create(ket: tuple, orb: int):
    """c†_orb applied to an ordered ket.  Returns (new_ket, sign) or None if
    the orbital is already occupied (Pauli exclusion)."""
    if orb in ket:
        return None
    pos = 0
    while pos < len(ket) and ket[pos] < orb:
        pos += 1
    sign = -1 if pos % 2 else 1
    return ket[:pos] + (orb,) + ket[pos:], sign


def annihilate(ket: tuple, orb: int):
    """c_orb applied to an ordered ket.  Returns (new_ket, sign) or None if
    the orbital is empty."""
    try:
        pos = ket.index(orb)
    except ValueError:
        return None
    sign = -1 if pos % 2 else 1
    return ket[:pos] + ket[pos + 1 :], sign


def apply_one_body(terms, vec: dict) -> dict:
    """Apply sum_k coef_k c†_{a_k} c_{b_k} to a state dictionary.

    ``terms`` is an iterable of (coef, create_orbital, annihilate_orbital).
    """
    out: dict = {}
    for ket, amp in vec.items():
        for coef, oc, oa in terms:
            hit = annihilate(ket, oa)
            if hit is None:
                continue
            ket1, s1 = hit
            hit = create(ket1, oc)
            if hit is None:
                continue
            ket2, s2 = hit
            out[ket2] = out.get(ket2, 0j) + coef * s1 * s2 * amp
    return {k: v for k, v in out.items() if v != 0}


def spin_raise_terms(sites):
    """S⁺ restricted to a site set: sum_i c†_{i↑} c_{i↓}."""
    return [(1.0, orbital(s, UP), orbital(s, DOWN)) for s in sorted(sites)]


def spin_lower_terms(sites):
    """S⁻ restricted to a site set: sum_i c†_{i↓} c_{i↑}."""
    return [(1.0, orbital(s, DOWN), orbital(s, UP)) for s in sorted(sites)]


def inner(bra: dict, ket: dict) -> complex:
    """<bra|ket> over the orthonormal occupation basis (fixed key order)."""
    if len(bra) > len(ket):
        return complex(sum(v * bra[k].conjugate() for k, v in sorted(ket.items()) if k in bra))
    return complex(sum(ket[k] * v.conjugate() for k, v in sorted(bra.items()) if k in ket))


def from_amp_matrix(amp) -> dict:
    """Expand a canonical amplitude matrix into the occupation-ket dictionary.

    Entry amp[i-1, j-1] contributes amp * c†_{i↑} c†_{j↓} |0>, reordered into
    the canonical ascending-orbital form with its anticommutation sign.
    """
    n = amp.shape[0]
    vec: dict = {}
    for i in range(n):
        for j in range(n):
            z = amp[i, j]
            if z == 0:
                continue
            ket, s1 = create((), orbital(j + 1, DOWN))
            hit = create(ket, orbital(i + 1, UP))
            if hit is None:
                continue
            ket, s2 = hit
            vec[ket] = vec.get(ket, 0j) + s1 * s2 * z
    return {k: v for k, v in vec.items() if v != 0}


def spinflip_correlator(amp, sites_a, sites_b) -> complex:
    """<ψ| S⁺_A S⁻_B |ψ> evaluated by explicit operator application."""
    vec = from_amp_matrix(amp)
    lowered = apply_one_body(spin_lower_terms(sites_b), vec)
    raised = apply_one_body(spin_raise_terms(sites_a), lowered)
    return inner(vec, raised)
