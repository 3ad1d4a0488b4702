# %% [markdown]
# # The command line pipeline
#
# Every command reads and writes UTF-8 JSON.  Exit code 0 means every check
# passed, 1 means a mathematical check failed, 2 means a usage or I/O error.

# %%
import json
import os
import tempfile

from qmatroid.cli import main

work = tempfile.mkdtemp()
m6 = os.path.join(work, "m6.json")
print(main(["build", "--construction", "representable", "--q", "2", "--p", "2", "--s", "3", "-o", m6]))
print(json.load(open(m6))["entries"][:3])

# %%
main(["classify", m6])

# %%
print("exit", main(["check", "--fixture", "jp18-example10", "--systems", "independence", "--variant", "I4"]))

# %%
print("exit", main(["roundtrip", m6, "--path", "flat,hyperplane,flat"]))
