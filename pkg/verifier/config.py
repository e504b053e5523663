"""
Engine configuration management.

Settings come from one of three presets; command options override them.
No environment variables are read.
"""

import logging
from pathlib import Path
from typing import Dict

from pydantic import BaseModel, ConfigDict, Field

from structures import EpsilonReading

logger = logging.getLogger(__name__)

FIXTURES_DIR = Path(__file__).parent / "fixtures"


class EngineConfig(BaseModel):
    """Settings shared by the search, campaign and report commands."""
    model_config = ConfigDict(frozen=True)

    # Search
    search_budget: int = Field(default=20_000, ge=1, description="Candidates visited per random search")
    exhaustive_budget: int = Field(default=200_000, ge=1, description="Candidates visited per exhaustive search")
    default_field: str = Field(default="F5", description="Field used when a command names none")
    default_dim: int = Field(default=2, ge=1, le=4, description="Dimension used when a command names none")
    default_seed: int = Field(default=42, ge=0, description="Seed used when a command names none")
    search_density: float = Field(default=0.35, gt=0.0, le=1.0,
                                  description="Share of random coefficients allowed to be nonzero")

    # Campaigns
    trials: int = Field(default=25, ge=1, description="Witnesses per theorem campaign")
    minimize_counterexamples: bool = Field(default=True, description="Shrink failing witnesses before storing")
    epsilon_reading: EpsilonReading = Field(default=EpsilonReading.XI,
                                            description="Reading of ε, ε² in the post-Hom-Poisson identities")
    record_both_epsilon_readings: bool = Field(default=True,
                                               description="Ledger pass rates under both ε readings")

    # Files
    output_dir: Path = Field(default=Path("out"), description="Directory for witnesses, reports and the ledger")
    fixtures_dir: Path = Field(default=FIXTURES_DIR, description="Handcrafted witness files")


def get_development_config() -> EngineConfig:
    """
    Get development configuration: small budgets, quick feedback.

    Returns:
        EngineConfig suitable for development
    """
    return EngineConfig(
        search_budget=5_000,
        exhaustive_budget=50_000,
        trials=10,
        minimize_counterexamples=True,
    )


def get_ci_config() -> EngineConfig:
    """
    Get CI configuration: the full campaign scale.

    Returns:
        EngineConfig suitable for the acceptance campaigns
    """
    return EngineConfig(
        search_budget=20_000,
        exhaustive_budget=200_000,
        trials=25,
        minimize_counterexamples=True,
        record_both_epsilon_readings=True,
    )


def get_testing_config() -> EngineConfig:
    """
    Get testing configuration: tiny budgets for the unit tests.

    Returns:
        EngineConfig suitable for testing
    """
    return EngineConfig(
        search_budget=300,
        exhaustive_budget=2_000,
        default_dim=1,
        trials=3,
        minimize_counterexamples=False,  # keeps failures verbatim for debugging
        record_both_epsilon_readings=False,
    )


PROFILES = ("development", "ci", "testing")


def create_config_for_profile(profile: str = "development") -> EngineConfig:
    """
    Create configuration for a named profile.

    Args:
        profile: development, ci or testing

    Returns:
        EngineConfig for the profile

    Raises:
        ValueError: For an unknown profile name
    """
    profile = profile.lower()

    if profile in ("ci", "acceptance"):
        logger.info("Loading ci engine configuration")
        return get_ci_config()
    elif profile in ("test", "testing"):
        logger.info("Loading testing engine configuration")
        return get_testing_config()
    elif profile in ("dev", "development"):
        logger.info("Loading development engine configuration")
        return get_development_config()
    raise ValueError(f"Unknown profile {profile!r}; expected one of {PROFILES}")


def config_fields() -> Dict[str, str]:
    """Field name -> description."""
    return {name: info.description or "" for name, info in EngineConfig.model_fields.items()}


def print_config_help():
    """Print help information about engine configuration."""
    print("Engine configuration fields:")
    print("=" * 50)
    for name, description in config_fields().items():
        print(f"{name:<32} {description}")
    print("\nProfiles (--profile): " + ", ".join(PROFILES))
    print("\nExample:")
    print("homcoalg --profile ci verify-theorem T-am1 --trials 25")
