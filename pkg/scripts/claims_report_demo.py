from __future__ import annotations

from selfdual_codes_lib import (
    ClaimsConfig,
    format_claims_table,
    has_engine_oracle_mismatch,
    load_env_from_repo_root,
    run_claims_report,
)


def main() -> None:
    load_env_from_repo_root()
    verdicts = run_claims_report(ClaimsConfig(max_n=20, include_sweeps=True, verbose=True))
    print("\n=== Claims ===\n")
    print(format_claims_table(verdicts))
    if has_engine_oracle_mismatch(verdicts):
        print("engine and oracle disagree on at least one instance")


if __name__ == "__main__":
    main()
