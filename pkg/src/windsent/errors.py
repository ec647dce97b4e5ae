"""Domain error hierarchy.

Every error carries a short machine-parsable ``code`` that the CLI prints as
``ERROR <code>: <message>`` on the diagnostic stream.
"""


class WindsentError(Exception):
    code = "error"
