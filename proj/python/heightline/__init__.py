"""Heights of points on the projective line over a prime field."""

from ._heightline import (
    HeightRecord,
    HypothesisNotMetError,
    NotInvertibleError,
    ParseError,
    Spectrum,
    TooLargeError,
    classify_peak,
    compute_spectrum,
    extract_peaks,
    fast_height,
    height,
    height_half_p_minus_b,
    height_p_minus_b,
    hyperbola_H,
    is_odd_prime,
    line_bound,
    mod_inverse,
    naive_height,
    point_height,
    points,
    primes_in_range,
    projective_point_count,
    record_runs,
    residue_records,
    scan_conjecture,
    space_spectrum,
    verify_spectrum,
    verify_theorems,
    window_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
