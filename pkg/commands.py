"""Centralized CLI command and option names."""

CMD_CONSTRUCT = "construct"
CMD_GB = "gb"
CMD_CHAINS = "chains"
CMD_HILBERT = "hilbert"
CMD_LANGFUN = "langfun"

METHOD_NORMALWORDS = "normalwords"
METHOD_EULER = "euler"
METHOD_FORMULA = "formula"
METHOD_CORRECTED = "corrected"
METHOD_CLOSEDFORM = "closedform"

HILBERT_METHODS = (
    METHOD_NORMALWORDS,
    METHOD_EULER,
    METHOD_FORMULA,
    METHOD_CORRECTED,
    METHOD_CLOSEDFORM,
)

FORMAT_JSON = "json"
FORMAT_TEXT = "text"

VERDICT_MATCH = "MATCH"
VERDICT_MISMATCH = "MISMATCH"
VERDICT_AGREE = "AGREE"
VERDICT_DISAGREE = "DISAGREE"
