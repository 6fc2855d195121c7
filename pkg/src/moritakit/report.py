"""Suite-report output: delimited per-instance rows plus summary figures."""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def write_results_csv(reports, path):
    """One row per (suite, instance, law) check."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["suite", "instance", "law", "passed", "witness"])
        for report in reports:
            for row in report.results:
                writer.writerow([report.suite, row.instance, row.law,
                                 "pass" if row.passed else "fail", row.witness])


def plot_suite_summary(reports, path):
    """Stacked pass/fail bars, one bar per suite."""
    names = [r.suite for r in reports]
    passed = [sum(1 for x in r.results if x.passed) for r in reports]
    failed = [sum(1 for x in r.results if not x.passed) for r in reports]
    fig, ax = plt.subplots(figsize=(8, 0.5 * max(len(names), 4) + 1.5))
    ypos = range(len(names))
    ax.barh(ypos, passed, color="#2a9d8f", label="pass")
    ax.barh(ypos, failed, left=passed, color="#e76f51", label="fail")
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlabel("checks")
    ax.set_title("verification suite results")
    ax.legend(loc="lower right")
    for y, (p, f) in enumerate(zip(passed, failed)):
        ax.annotate(f"{p}✓" + (f" {f}✗" if f else ""), (p + f, y),
                    va="center", ha="left", fontsize=8)
    ax.margins(x=0.12)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_corpus_profile(corpus, path):
    """Size profile of the generated corpus."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    arrow_counts = [len(item.value.arrows) for item in corpus.groupoids]
    if arrow_counts:
        bins = range(max(arrow_counts) + 2)
        ax1.hist(arrow_counts, bins=bins, color="#264653", align="left",
                 rwidth=0.8)
    ax1.set_xlabel("arrows per groupoid")
    ax1.set_ylabel("groupoids")
    ax1.set_title(f"{len(corpus.groupoids)} groupoids "
                  f"(≤{corpus.spec.max_objects} objects, "
                  f"≤{corpus.spec.max_arrows} arrows)")
    sizes = {"actions": [len(i.value.carrier) for i in corpus.actions],
             "bundles": [len(i.value.carrier) for i in corpus.bundles],
             "bibundles": [len(i.value.carrier) for i in corpus.bibundles]}
    positions = range(len(sizes))
    ax2.boxplot([v or [0] for v in sizes.values()],
                positions=list(positions), widths=0.6)
    ax2.set_xticks(list(positions))
    ax2.set_xticklabels([f"{k}\n(n={len(v)})" for k, v in sizes.items()])
    ax2.set_ylabel("carrier size")
    ax2.set_title("derived corpus objects")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report_directory(reports, outdir, corpus=None):
    """results.csv plus rendered figures; returns the written paths."""
    os.makedirs(outdir, exist_ok=True)
    written = []
    csv_path = os.path.join(outdir, "results.csv")
    write_results_csv(reports, csv_path)
    written.append(csv_path)
    summary_path = os.path.join(outdir, "suite_summary.png")
    plot_suite_summary(reports, summary_path)
    written.append(summary_path)
    if corpus is not None:
        profile_path = os.path.join(outdir, "corpus_profile.png")
        plot_corpus_profile(corpus, profile_path)
        written.append(profile_path)
    return written
