//! Generated plot scripts (Python + matplotlib). The scripts reference only
//! the emitted CSV by its file name, never the network, so a figure can be
//! rendered anywhere the CSV travels.

/// Script for a three-curve figure CSV (x, exact, first-order, corrected):
/// solid exact, dashed first-order, dotted corrected.
pub fn figure_script(csv_name: &str, x_label: &str, title: &str) -> String {
    format!(
        r##"#!/usr/bin/env python3
# edgeworth-rmt v1 plot script; reads {csv}
import csv
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

xs, exact, first, corrected = [], [], [], []
with open("{csv}") as fh:
    rows = csv.reader(line for line in fh if not line.startswith("#"))
    header = next(rows)
    for row in rows:
        xs.append(float(row[0]))
        exact.append(float(row[1]))
        first.append(float(row[2]))
        corrected.append(float(row[3]))

plt.figure(figsize=(7, 4.5))
plt.plot(xs, exact, "-", color="black", label="exact")
plt.plot(xs, first, "--", color="tab:blue", label="first order (Airy)")
plt.plot(xs, corrected, ":", color="tab:red", label="corrected")
plt.xlabel("{x_label}")
plt.title("{title}")
plt.legend()
plt.tight_layout()
plt.savefig("{stem}.png", dpi=150)
print("wrote {stem}.png")
"##,
        csv = csv_name,
        x_label = x_label,
        title = title,
        stem = csv_name.trim_end_matches(".csv"),
    )
}

/// Script for the tw2-table CSV: F2 and the E-functions against s.
pub fn table_script(csv_name: &str) -> String {
    format!(
        r##"#!/usr/bin/env python3
# edgeworth-rmt v1 plot script; reads {csv}
import csv
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

cols = {{}}
with open("{csv}") as fh:
    rows = csv.reader(line for line in fh if not line.startswith("#"))
    header = next(rows)
    data = list(rows)
for i, name in enumerate(header):
    cols[name] = [float(r[i]) for r in data]

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
ax1.plot(cols["s"], cols["F2"], "-", color="black")
ax1.set_xlabel("s"); ax1.set_title("F2")
ax2.plot(cols["s"], cols["E_G"], "-", label="E_G")
ax2.plot(cols["s"], cols["E_L"], "--", label="E_L")
ax2.set_xlabel("s"); ax2.set_title("second-order correction functions")
ax2.legend()
plt.tight_layout()
plt.savefig("{stem}.png", dpi=150)
print("wrote {stem}.png")
"##,
        csv = csv_name,
        stem = csv_name.trim_end_matches(".csv"),
    )
}

/// Script for a convergence CSV (n, sup_err): log-log decay plot.
pub fn converge_script(csv_name: &str) -> String {
    format!(
        r##"#!/usr/bin/env python3
# edgeworth-rmt v1 plot script; reads {csv}
import csv
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

ns, errs = [], []
with open("{csv}") as fh:
    rows = csv.reader(line for line in fh if not line.startswith("#"))
    header = next(rows)
    for row in rows:
        ns.append(float(row[0]))
        errs.append(float(row[1]))

plt.figure(figsize=(6, 4.5))
plt.loglog(ns, errs, "o-")
plt.xlabel("n")
plt.ylabel("sup error")
plt.tight_layout()
plt.savefig("{stem}.png", dpi=150)
print("wrote {stem}.png")
"##,
        csv = csv_name,
        stem = csv_name.trim_end_matches(".csv"),
    )
}
