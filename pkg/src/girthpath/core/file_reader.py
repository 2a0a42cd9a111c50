"""Simple file reading utilities for instance files."""

from pathlib import Path

# Maximum instance file size to read (64MB)
MAX_FILE_SIZE = 64 * 1024 * 1024


def resolve_path(file_path: str | Path) -> Path:
    """Resolve a path relative to the current working directory."""
    path = Path(file_path)
    if not path.is_absolute():
        path = Path.cwd() / path
    return path.resolve()


def read_file(file_path: str | Path) -> str:
    """Read a single instance file.

    Args:
        file_path: Path to the file (absolute or relative to current working directory)

    Returns:
        File contents as string

    Raises:
        FileNotFoundError: If file doesn't exist
        IsADirectoryError: If path points to a directory
        ValueError: If file is too large
        UnicodeDecodeError: If file can't be decoded as text
    """
    path = resolve_path(file_path)

    if not path.exists():
        raise FileNotFoundError(f"File does not exist: {file_path}")

    if path.is_dir():
        raise IsADirectoryError(f"Path is a directory, not a file: {file_path}")

    if path.stat().st_size > MAX_FILE_SIZE:
        raise ValueError(
            f"File too large (max {MAX_FILE_SIZE // (1024 * 1024)}MB): {file_path}"
        )

    with open(path, encoding="utf-8") as f:
        return f.read()


def write_file(file_path: str | Path, content: str) -> Path:
    """Write text with LF line endings, creating parent directories.

    Returns:
        The resolved path that was written
    """
    path = resolve_path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(content)
    return path
