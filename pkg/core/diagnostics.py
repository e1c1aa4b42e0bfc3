"""
Self-test for a rankforge installation, run by ``main.py --check``.
"""

import importlib.metadata
import os
import platform
import sys
from datetime import datetime

from core.constants import DEFAULT_ENUMERATION_CAP
from core.errors import RankForgeError
from utils.paths import CONFIGS_DIR, LOGS_DIR

REQUIRED_PACKAGES = {
    "numpy": "1.24",
    "galois": "0.3",
    "python-dotenv": "1.0.0",
    "psutil": "5.9",
}


class SystemDiagnostics:
    """
    Installation checks, in order:
    1. required packages
    2. writable logs/ and configs/
    3. the effective enumeration cap
    4. GF(2^4) arithmetic with x^4 + x + 1
    5. optionally, every worked example
    """

    def __init__(self, include_examples: bool = False):
        self.results = []
        self.all_passed = True
        self.include_examples = include_examples

    def log(self, message, status="INFO"):
        stamp = datetime.now().strftime("%H:%M:%S")
        self.results.append(f"[{stamp}] [{status}] {message}")
        if status == "ERROR":
            self.all_passed = False

    def check_dependencies(self):
        self.log("Required packages", "INFO")
        for package, minimum in REQUIRED_PACKAGES.items():
            try:
                found = importlib.metadata.version(package)
            except importlib.metadata.PackageNotFoundError:
                self.log(f"{package} >= {minimum} not installed", "ERROR")
                continue
            self.log(f"{package} {found} (>= {minimum})", "PASS")

    def check_permissions(self):
        self.log("Data directories", "INFO")
        for directory in (LOGS_DIR, CONFIGS_DIR):
            if not directory.exists():
                try:
                    directory.mkdir(parents=True, exist_ok=True)
                except OSError as e:
                    self.log(f"{directory} cannot be created: {e}", "ERROR")
                    continue
                self.log(f"{directory} created", "FIX")
            status = "PASS" if os.access(directory, os.W_OK) else "ERROR"
            self.log(f"{directory.name}/ writable: {'yes' if status == 'PASS' else 'no'}", status)

    def check_enumeration_cap(self):
        """The cap every enumerating command will use without --cap."""
        from core.config_manager import ConfigManager

        try:
            cap = ConfigManager().get_enumeration_cap()
        except RankForgeError as e:
            self.log(f"Enumeration cap unreadable: {e}", "ERROR")
            return
        source = "default" if cap == DEFAULT_ENUMERATION_CAP else "environment"
        self.log(f"Enumeration cap {cap} ({source})", "PASS")

    def check_field_arithmetic(self):
        """alpha^4 = alpha + 1 and alpha has order 15 in GF(2^4)"""
        self.log("Field arithmetic", "INFO")
        try:
            from core.finite_field import make_ext_field

            field = make_ext_field(2, 4, (1, 1, 0, 0, 1))
            alpha = field.gamma
            ok = alpha ** 4 == alpha + field.one and int(alpha.multiplicative_order()) == 15
        except Exception as e:
            self.log(f"GF(2^4) construction failed: {e}", "ERROR")
            return
        if ok:
            self.log("GF(2^4) arithmetic: OK", "PASS")
        else:
            self.log("GF(2^4) arithmetic gives wrong results", "ERROR")

    def check_examples(self):
        self.log("Worked examples", "INFO")
        from core.reproduction import run_all

        for result in run_all():
            if result.passed:
                self.log(f"Example {result.name}: OK", "PASS")
            else:
                failed = [label for label, ok in result.checks if not ok]
                self.log(f"Example {result.name} failed: {', '.join(failed)}", "ERROR")

    def run_all(self):
        """Run every check; returns (report text, all passed)."""
        self.log(f"rankforge diagnostics on {platform.system()} {platform.release()}, "
                 f"Python {platform.python_version()}", "INFO")

        self.check_dependencies()
        self.check_permissions()
        self.check_enumeration_cap()
        self.check_field_arithmetic()
        if self.include_examples:
            self.check_examples()

        verdict = "all checks passed" if self.all_passed else "some checks FAILED"
        self.log(f"Diagnostics finished: {verdict}", "INFO")
        return "\n".join(self.results), self.all_passed


if __name__ == "__main__":
    report, passed = SystemDiagnostics(include_examples=True).run_all()
    sys.stdout.write(report + "\n")
    sys.exit(0 if passed else 1)
