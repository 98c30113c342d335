import pathlib

LIB_DIR = pathlib.Path(__file__).parent
REPO_DIR = LIB_DIR.parent
DATA_DIR = LIB_DIR / "data"
BOUNDS_REGISTRY_PATH = DATA_DIR / "bounds.yaml"
CHAINS_REGISTRY_PATH = DATA_DIR / "chains.yaml"
SERIES_REGISTRY_PATH = DATA_DIR / "series.yaml"
FIXTURES_REGISTRY_PATH = DATA_DIR / "fixtures.yaml"
