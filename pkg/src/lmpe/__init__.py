"""Limited-magnitude probability-error (LMPE) correction codes for
composite-DNA probability vectors: classification, block codes, Gray
mappings, full codecs, and closed-form bounds."""

__version__ = "0.1.0"

from .blockcodes import DecodeFailure
from .constructions import LmpeCodeSpec, Message, build, lmpe_decode, lmpe_encode

__all__ = ["DecodeFailure", "LmpeCodeSpec", "Message", "build",
           "lmpe_decode", "lmpe_encode", "__version__"]
