"""Exact Hurwitz class numbers, half-integral weight Kloosterman sums, and
Kloosterman zeta data, with identity-verification suites."""

from ._core import (
    alpha,
    alpha_via_gamma,
    c_frak,
    decompose_discriminant,
    gen_hurwitz,
    hurwitz,
    hurwitz_oracle,
    hurwitz_series,
    incomplete_gamma,
    kloosterman,
    kronecker,
    kz_factored,
    kz_truncated,
    local_density_A,
    modified_kloosterman,
    moebius,
    residue_r,
    sturm_bound,
    ternary_theta,
    theta_series,
    verify_example,
    verify_kohnen,
    verify_lemma52,
    verify_prop33,
    verify_shadow,
    verify_theta3,
    verify_thm11,
)

__all__ = [
    "alpha",
    "alpha_via_gamma",
    "c_frak",
    "decompose_discriminant",
    "gen_hurwitz",
    "hurwitz",
    "hurwitz_oracle",
    "hurwitz_series",
    "incomplete_gamma",
    "kloosterman",
    "kronecker",
    "kz_factored",
    "kz_truncated",
    "local_density_A",
    "modified_kloosterman",
    "moebius",
    "residue_r",
    "sturm_bound",
    "ternary_theta",
    "theta_series",
    "verify_example",
    "verify_kohnen",
    "verify_lemma52",
    "verify_prop33",
    "verify_shadow",
    "verify_theta3",
    "verify_thm11",
]
