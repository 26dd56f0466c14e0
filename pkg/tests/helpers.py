from qsymp.pathalg import STARRED, UNSTARRED, NecklaceElem


def necklace(spec, starred=False):
    return NecklaceElem.parse(STARRED if starred else UNSTARRED, spec)
