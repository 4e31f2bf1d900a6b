#!/usr/bin/env python3
"""Writes the synthetic demo corpus under data/demo/.

The corpus has 30 raw entries across the three supported export formats,
covering 2000-2014. Topics are planted so that "feature location" and
"open source" rise while "program slicing" and "legacy systems" fall.
Two entries lack an abstract or authors and three are cross-source duplicates, so
ingest reports total_in=30, incomplete_removed=2, duplicates_removed=3.

The output is fixed; re-running the script reproduces the committed files.
"""

import csv
import io
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "demo"

# (year, title, abstract, keywords, authors)
EARLY = [
    (2000, "Program slicing for legacy systems",
     "We apply program slicing to legacy systems. Static analysis of legacy code supports the "
     "case study. Program slicing reduces the code under review.",
     ["program slicing", "legacy systems"], ["A. Weiser", "B. Tip"]),
    (2000, "Understanding legacy COBOL programs",
     "Legacy systems resist change. A case study on program slicing shows how static analysis helps "
     "maintainers understand legacy code.",
     ["legacy systems", "static analysis"], ["C. Binkley"]),
    (2001, "Dynamic program slicing revisited",
     "Program slicing computes relevant statements. We combine static analysis and dynamic analysis "
     "in a case study of legacy systems.",
     ["program slicing", "dynamic analysis"], ["D. Korel", "E. Laski"]),
    (2001, "Visualization of legacy software",
     "Software visualization helps maintainers of legacy systems. A case study reports on "
     "visualization of program slicing results.",
     ["visualization", "legacy systems"], ["F. Storey"]),
    (2002, "Slicing object-oriented programs",
     "Program slicing of object-oriented code needs static analysis. A case study and an experiment "
     "evaluate the approach on legacy systems.",
     ["program slicing"], ["G. Harman"]),
    (2002, "Reverse engineering legacy systems",
     "Legacy systems are reverse engineered with static analysis. The case study uses program slicing.",
     ["legacy systems", "reverse engineering"], ["H. Muller"]),
    (2003, "Clone detection in legacy code",
     "Clone detection finds duplicated code in legacy systems. A case study compares clone detection "
     "with program slicing.",
     ["clone detection", "legacy systems"], ["I. Baxter"]),
    (2003, "Static analysis for program comprehension",
     "Static analysis supports program comprehension. An experiment with visualization and program "
     "slicing is reported.",
     ["static analysis", "visualization"], ["J. Reiss"]),
    (2004, "Feature location with dynamic analysis",
     "Feature location maps features to code. Dynamic analysis supports feature location in a case "
     "study of open source systems.",
     ["feature location", "dynamic analysis"], ["K. Eisenbarth"]),
    (2004, "Dynamic analysis of legacy systems",
     "Dynamic analysis complements static analysis. A case study on legacy systems uses visualization.",
     ["dynamic analysis"], ["L. Cornelissen"]),
    (2005, "Concept location in open source systems",
     "Feature location and concept location in open source systems. An experiment with open source "
     "developers evaluates feature location.",
     ["feature location", "open source"], ["M. Marcus", "N. Rajlich"]),
    (2005, "Program slicing survey",
     "This survey reviews program slicing. Program slicing supports legacy systems maintenance.",
     ["program slicing", "survey"], ["O. Xu"]),
]

LATE = [
    (2006, "Feature location using information retrieval",
     "Feature location with information retrieval in open source systems. An experiment shows feature "
     "location accuracy improves with dynamic analysis.",
     ["feature location", "information retrieval"], ["P. Poshyvanyk"]),
    (2007, "Open source developers and comprehension",
     "We study open source developers. An experiment on open source projects measures visualization "
     "use and feature location.",
     ["open source", "experiment"], ["Q. Ko"]),
    (2007, "Visualization of execution traces",
     "Dynamic analysis produces execution traces. Visualization of traces supports feature location in "
     "open source systems.",
     ["visualization", "dynamic analysis"], ["R. Cornelissen"]),
    (2008, "Clone detection at scale",
     "Clone detection on open source systems. An experiment compares clone detection tools.",
     ["clone detection", "open source"], ["S. Roy"]),
    (2009, "A survey of feature location",
     "This survey reviews feature location. Feature location in open source systems dominates "
     "recent work.",
     ["feature location", "survey"], ["T. Dit"]),
    (2010, "Feature location in software product lines",
     "Feature location in open source product lines. An experiment evaluates dynamic analysis for "
     "feature location.",
     ["feature location", "open source"], ["U. Rubin"]),
    (2011, "Controlled experiment on program comprehension",
     "An experiment with open source developers. The experiment compares visualization and feature "
     "location.",
     ["experiment", "feature location"], ["V. Siegmund"]),
    (2012, "Clone detection and feature location",
     "Clone detection supports feature location. Open source systems provide the experiment data.",
     ["clone detection", "feature location"], ["W. Koschke"]),
    (2013, "Eye tracking during feature location",
     "An experiment with eye tracking during feature location tasks in open source systems.",
     ["feature location", "experiment"], ["X. Sharif"]),
    (2014, "Open source feature location benchmark",
     "A benchmark of feature location in open source systems. A survey and an experiment use "
     "dynamic analysis.",
     ["feature location", "open source"], ["Y. Razzaq", "Z. Wasala"]),
]

EXTRA = [
    (2001, "Legacy systems migration strategies",
     "Migration of legacy systems needs program slicing and static analysis. A case study reports "
     "lessons learned.",
     ["legacy systems", "migration"], ["A. Bisbal"]),
    (2008, "Feature location in web applications",
     "Feature location in open source web applications. An experiment combines dynamic analysis and "
     "visualization.",
     ["feature location", "open source"], ["B. Revelle"]),
    (2011, "Open source clone detection study",
     "Clone detection in open source systems. The experiment studies feature location with clone "
     "detection.",
     ["clone detection", "open source"], ["C. Kapser"]),
]

# Incomplete entries (dropped by ingest).
INCOMPLETE = [
    (2006, "Untitled workshop summary", "", ["summary"], ["A. Chair"]),
    (2012, "Panel on open source comprehension", "A panel about open source systems.", [], []),
]

# Duplicates of existing entries exported by another source.
DUPLICATES = [
    (2005, "PROGRAM SLICING SURVEY", "This survey reviews program slicing.", [], ["O. Xu"]),
    (2009, "A Survey of Feature Location!", "This survey reviews feature location.", [], ["T. Dit"]),
    (2014, "Open source feature location benchmark.",
     "A benchmark of feature location in open source systems.", ["feature location"], ["Y. Razzaq"]),
]


def bibtex(entries):
    out = io.StringIO()
    for i, (year, title, abstract, keywords, authors) in enumerate(entries, 1):
        out.write(f"@article{{demo{i},\n")
        out.write(f"  title = {{{title}}},\n")
        out.write(f"  author = {{{' and '.join(authors)}}},\n")
        if abstract:
            out.write(f"  abstract = {{{abstract}}},\n")
        if keywords:
            out.write(f"  keywords = {{{'; '.join(keywords)}}},\n")
        out.write(f"  year = {{{year}}}\n}}\n\n")
    return out.getvalue()


def ieee_csv(entries):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n", quoting=csv.QUOTE_ALL)
    writer.writerow(["Document Title", "Authors", "Author Keywords", "IEEE Terms", "Abstract",
                     "Publication Year"])
    for year, title, abstract, keywords, authors in entries:
        writer.writerow([title, "; ".join(authors), ";".join(keywords), "Software", abstract, year])
    return out.getvalue()


def endnote(entries):
    out = io.StringIO()
    for year, title, abstract, keywords, authors in entries:
        out.write("%0 Conference Proceedings\n")
        out.write(f"%T {title}\n")
        for a in authors:
            out.write(f"%A {a}\n")
        out.write(f"%D {year}\n")
        for k in keywords:
            out.write(f"%K {k}\n")
        if abstract:
            out.write(f"%X {abstract}\n")
        out.write("\n")
    return out.getvalue()


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    # Scopus-like BibTeX: early papers, one incomplete entry, one duplicate.
    (OUT / "scopus.bib").write_text(bibtex(EARLY + LATE[:4] + [INCOMPLETE[0], DUPLICATES[1]]))
    # IEEE-like CSV: the rest of the late papers, one incomplete entry, one duplicate.
    (OUT / "ieee.csv").write_text(ieee_csv(LATE[4:8] + EXTRA + [INCOMPLETE[1], DUPLICATES[0]]))
    # HCI Bibliography-like EndNote: the newest papers and one duplicate.
    (OUT / "hcibib.enw").write_text(endnote(LATE[8:] + [DUPLICATES[2]]))


if __name__ == "__main__":
    main()
