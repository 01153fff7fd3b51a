import os
import shutil
import sys

from dotenv import load_dotenv


def check_requirements():
    """
    Check that the libraries the toolkit imports are installed.

    Returns:
        True if every package imports, False otherwise
    """
    missing = []
    for package in ("pydantic", "dotenv", "numpy", "pandas", "sympy", "ply"):
        try:
            __import__(package)
        except ImportError:
            missing.append(package)
    if missing:
        print(f"Missing required packages: {', '.join(missing)}", file=sys.stderr)
        print("Install them with: pip install -r requirements.txt", file=sys.stderr)
        return False
    return True


def check_environment():
    """
    Create .env from .env.example when it is missing, then load it.
    """
    if not os.path.exists(".env") and os.path.exists(".env.example"):
        print("Creating .env file from .env.example...", file=sys.stderr)
        shutil.copyfile(".env.example", ".env")
    load_dotenv()


def run_application(argv=None):
    """
    Run one command of the quantum group toolkit.

    Args:
        argv: Command-line arguments without the program name

    Returns:
        The exit status of the command
    """
    if not check_requirements():
        return 2
    check_environment()

    from app import run

    return run(argv)


if __name__ == "__main__":
    sys.exit(run_application(sys.argv[1:]))
