import os
import sys

# so test modules can import the shared helpers regardless of import mode
sys.path.insert(0, os.path.dirname(__file__))
