"""Print the rho tables (scalar products with the positive roots) and compare with the stored goldens."""
import argparse

from fusioncat import golden
from fusioncat.export import table_to_csv
from fusioncat.lie import lie_data
from fusioncat.quiver import rho_table

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("types", nargs="*", default=sorted(golden.RHO_ROOT_TABLES))
args = parser.parse_args()

for name in args.types:
    tab = rho_table(lie_data(name))
    print(f"# {name}")
    print(table_to_csv(tab), end="")
    if name in golden.RHO_ROOT_TABLES:
        same = tab.rows == golden.load_table(golden.RHO_ROOT_TABLES[name])
        print(f"# matches stored table: {same}")
    print()
