# %% [markdown]
# # File formats and the command line

# %%
import subprocess
import sys

from graphstress import named, parse_graph, parse_graph6, to_graph6
from graphstress.formats import to_adjacency_matrix_text, to_edge_list_text

prism = named("FIG3_PRISM")
line = to_graph6(prism)
print(line, parse_graph6(line) == prism)
print(to_edge_list_text(prism))
print(to_adjacency_matrix_text(prism))
assert parse_graph(to_adjacency_matrix_text(prism)) == prism

# %% [markdown]
# The same computations through the `graphstress` command.

# %%
def cli(*args, stdin=""):
    out = subprocess.run([sys.executable, "-m", "graphstress.cli", *args], input=stdin,
                         capture_output=True, text=True)
    return out.stdout

print(cli("compute", stdin=line + "\n"))
print(cli("classify", "--json", stdin=line + "\n"))
print(cli("verify", "--theorem", "6.5", "--max-n", "5"))
