#!/usr/bin/env python3
#
# Project cyclograph - Copyright 2026 The cyclograph Authors.
# SPDX-License-Identifier: Apache-2.0
#
"""Regenerates data/fixtures.sdf. Requires RDKit; the C++ build does not."""

import sys

from rdkit import Chem
from rdkit.Chem import rdDepictor

SMILES = [
    ("docetaxel_anhydrous",
     "CC1=C2C(O)C(=O)C3(C)C(O)CC4OCC4(OC(C)=O)C3C(OC(=O)c3ccccc3)C(O)"
     "(CC1OC(=O)C(O)C(NC(=O)OC(C)(C)C)c1ccccc1)C2(C)C"),
    ("amphotericin_b",
     "CC1C=CC=CC=CC=CC=CC=CC=CC(CC2C(C(CC(O2)(CC(CC(C(CCC(CC(CC(=O)OC(C(C1O)C)C)"
     "O)O)O)O)O)O)O)C(=O)O)OC3C(C(C(C(O3)C)O)N)O"),
    ("strychnine", "C1CN2CC3=CCOC4CC(=O)N5C6C4C3CC2C61c1ccccc15"),
    ("quinine", "COc1ccc2nccc(C(O)C3CC4CCN3CC4C=C)c2c1"),
    ("cholesterol", "CC(C)CCCC(C)C1CCC2C1(C)CCC1C2CC=C2CC(O)CCC12C"),
]


def manzamine_skeleton():
    # beta-carboline on a 6/6/5/13/8 pentacyclic diamine core
    m = Chem.RWMol(Chem.MolFromSmiles("c1ccc2c(c1)[nH]c1c(C)nccc12"))
    anchor = [a.GetIdx() for a in m.GetAtoms()
              if a.GetSymbol() == "C" and a.GetDegree() == 1][0]

    def add(sym):
        return m.AddAtom(Chem.Atom(sym))

    def bond(a, b, order=Chem.BondType.SINGLE):
        m.AddBond(a, b, order)

    ring_a = [anchor] + [add("C") for _ in range(5)]
    bond(ring_a[0], ring_a[1], Chem.BondType.DOUBLE)
    for i in range(1, 5):
        bond(ring_a[i], ring_a[i + 1])
    bond(ring_a[5], ring_a[0])
    b1, b2, nb, b3 = add("C"), add("C"), add("N"), add("C")
    bond(ring_a[2], b1); bond(b1, b2); bond(b2, nb); bond(nb, b3); bond(b3, ring_a[3])
    c1, nc, c2 = add("C"), add("N"), add("C")
    bond(ring_a[3], c1); bond(c1, nc); bond(nc, c2); bond(c2, ring_a[4])
    e = [add("C") for _ in range(6)]
    bond(nc, e[0])
    for i in range(5):
        bond(e[i], e[i + 1], Chem.BondType.DOUBLE if i == 2 else Chem.BondType.SINGLE)
    bond(e[5], c2)
    d = [add("C") for _ in range(11)]
    bond(nb, d[0])
    for i in range(10):
        bond(d[i], d[i + 1], Chem.BondType.DOUBLE if i == 7 else Chem.BondType.SINGLE)
    bond(d[10], b3)
    bond(ring_a[5], add("O"))
    mol = m.GetMol()
    Chem.SanitizeMol(mol)
    return mol


def ether_ladder(sizes):
    # trans-fused polyether ladder, adjacent rings share one C-C bond
    m = Chem.RWMol()

    def add(sym):
        return m.AddAtom(Chem.Atom(sym))

    def bond(a, b, order=Chem.BondType.SINGLE):
        m.AddBond(a, b, order)

    u, w = add("C"), add("C")
    bond(u, w)
    prev, path = w, []
    for k in range(sizes[0] - 2):
        a = add("O" if k == sizes[0] - 3 else "C")
        bond(prev, a)
        prev = a
        path.append(a)
    bond(prev, u)
    bond(path[-2], add("O"), Chem.BondType.DOUBLE)
    top = True
    for s in sizes[1:-1]:
        nu, nw = add("C"), add("C")
        bond(nu, nw)
        o = add("O")
        near, far = (u, w) if top else (w, u)
        near_new, far_new = (nu, nw) if top else (nw, nu)
        bond(near, o); bond(o, near_new)
        prev = far
        for _ in range(s - 5):
            a = add("C"); bond(prev, a); prev = a
        bond(prev, far_new)
        if top:
            bond(nu, add("C"))
        u, w = nu, nw
        top = not top
    prev = u
    o = add("O"); bond(prev, o); prev = o
    for _ in range(sizes[-1] - 3):
        a = add("C"); bond(prev, a); prev = a
    bond(prev, w)
    c1, c2, c3 = add("C"), add("C"), add("C")
    bond(prev, c1); bond(c1, c2, Chem.BondType.DOUBLE); bond(c2, c3)
    bond(c3, add("O"), Chem.BondType.DOUBLE)
    mol = m.GetMol()
    Chem.SanitizeMol(mol)
    return mol


def main(out):
    mols = [(name, Chem.MolFromSmiles(smi)) for name, smi in SMILES]
    mols.insert(5, ("manzamine_a", manzamine_skeleton()))
    mols.insert(6, ("brevetoxin_a", ether_ladder([5, 8, 6, 7, 9, 8, 8, 6, 6, 5])))
    mols.append(("vomicine",
                 Chem.MolFromSmiles("C1CN(C)CC3=CCOC4CC(=O)N5C6C4C3CC(=O)C61c1cccc(O)c15")))
    with open(out, "w") as fh:
        for name, mol in mols:
            mol.SetProp("_Name", name)
            rdDepictor.Compute2DCoords(mol)
            fh.write(Chem.MolToMolBlock(mol, kekulize=False, includeStereo=False))
            fh.write("> <source>\ncyclograph fixture\n\n$$$$\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/fixtures.sdf")
