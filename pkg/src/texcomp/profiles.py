"""Threshold-profile persistence as versioned JSON."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ProfileError
from .feedback import CalibrationMeta, ProfileSource, ThresholdProfile

PROFILE_VERSION = 1


def profile_to_dict(profile: ThresholdProfile) -> dict:
    meta = profile.calibration_meta
    return {
        "version": PROFILE_VERSION,
        "tcld_min": profile.tcld_min,
        "tcld_max": profile.tcld_max,
        "tcr_min": profile.tcr_min,
        "tcr_max": profile.tcr_max,
        "source": profile.source.value,
        "calibration_meta": (
            None if meta is None else {"n": meta.n, "p_low": meta.p_low, "p_high": meta.p_high}
        ),
    }


def profile_from_dict(data: dict) -> ThresholdProfile:
    if not isinstance(data, dict):
        raise ProfileError("profile must be a JSON object")
    version = data.get("version")
    if version != PROFILE_VERSION:
        raise ProfileError(f"unrecognized profile version {version!r}")
    try:
        meta_data = data.get("calibration_meta")
        meta = (
            None
            if meta_data is None
            else CalibrationMeta(
                n=int(meta_data["n"]),
                p_low=float(meta_data["p_low"]),
                p_high=float(meta_data["p_high"]),
            )
        )
        return ThresholdProfile(
            tcld_min=float(data["tcld_min"]),
            tcld_max=float(data["tcld_max"]),
            tcr_min=float(data["tcr_min"]),
            tcr_max=float(data["tcr_max"]),
            source=ProfileSource(data["source"]),
            calibration_meta=meta,
        )
    except (KeyError, TypeError, ValueError) as err:
        raise ProfileError(f"invalid profile contents: {err}") from err


def save_profile(profile: ThresholdProfile, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(profile_to_dict(profile), indent=2) + "\n", encoding="utf-8"
    )


def load_profile(path: str | Path) -> ThresholdProfile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as err:
        raise ProfileError(f"cannot read profile {path}: {err}") from err
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ProfileError(f"profile {path} is not valid JSON: {err}") from err
    return profile_from_dict(data)
