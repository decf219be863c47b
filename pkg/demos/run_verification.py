"""
Running a verification suite
============================

The bundled configuration drives the acceptance corpus.  Here we run a
small exhaustive section from a config string and print the per-property
tallies.
"""
from serre_sr.verify import load_config, run_config_section

CONFIG = """
[defaults]
field = 2
ells = 2-3
js = 0-2

[tiny]
mode = exhaustive
n = 4
k = 3
cross_field = 32003
suites = equivalence, necessity, classical
"""

for section in load_config(CONFIG):
    report = run_config_section(section, workers=1)
    print(section["name"], report.instances, "complexes")
    for pid, prop in report.properties.items():
        print(f"  {pid:<26} checked {prop.checked:>3}  failed {len(prop.failures)}")
