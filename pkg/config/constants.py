import os
from dotenv import load_dotenv

# Load environment variables from .env
load_dotenv()


# Calculator
SGC_OUTPUT_FORMAT = os.getenv("SGC_OUTPUT_FORMAT", "literal")
SGC_UNICODE_ATOMS = os.getenv("SGC_UNICODE_ATOMS", "false")
SGC_PROMPT = os.getenv("SGC_PROMPT", "sgc> ")

# Engine
SGC_ORACLE_MAX_CANDIDATES = int(os.getenv("SGC_ORACLE_MAX_CANDIDATES", "20000"))
SGC_ORACLE_MAX_OPTIONS = int(os.getenv("SGC_ORACLE_MAX_OPTIONS", "1"))
SGC_RECURSION_LIMIT = int(os.getenv("SGC_RECURSION_LIMIT", "10000"))

# Logging
SGC_DEBUG = os.getenv("SGC_DEBUG", "false")
