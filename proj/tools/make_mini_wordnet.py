#!/usr/bin/env python3
"""Writes the bundled mini WordNet (WNDB 3.x layout) into data/wordnet-mini.

Offsets are real byte offsets, so the files are also readable by other
WNDB tools. Re-run after editing the synset tables below.
"""

import os
import sys

HEADER = "  1 This is a small hand-authored database in WordNet 3.0 file format.\n"

# name -> (lemmas, hypernym names, lexfile number, gloss)
NOUNS = {
    "entity": (["entity"], [], 3, "that which is perceived to have its own distinct existence"),
    "physical_entity": (["physical_entity"], ["entity"], 3, "an entity that has physical existence"),
    "abstraction": (["abstraction", "abstract_entity"], ["entity"], 3, "a general concept"),
    "matter": (["matter"], ["physical_entity"], 27, "that which has mass and occupies space"),
    "substance": (["substance"], ["matter"], 27, "a particular kind of matter"),
    "chemical_element": (["chemical_element", "element"], ["substance"], 27, "any of the basic substances"),
    "gas": (["gas"], ["substance"], 27, "a fluid with no definite shape or volume"),
    "hydrogen": (["hydrogen", "H"], ["chemical_element", "gas"], 27, "the lightest element"),
    "helium": (["helium", "He"], ["chemical_element", "gas"], 27, "a light inert gas"),
    "oxygen": (["oxygen", "O"], ["chemical_element", "gas"], 27, "a gas essential for respiration"),
    "carbon": (["carbon", "C"], ["chemical_element"], 27, "an abundant nonmetallic element"),
    "iron": (["iron", "Fe"], ["chemical_element"], 27, "a heavy ductile metallic element"),
    "water": (["water", "H2O"], ["substance"], 27, "a clear colorless liquid"),
    "object": (["object", "physical_object"], ["physical_entity"], 17, "a tangible and visible entity"),
    "celestial_body": (["celestial_body", "heavenly_body"], ["object"], 17, "a natural object in the sky"),
    "star": (["star"], ["celestial_body"], 17, "a hot gaseous mass radiating energy"),
    "sun": (["sun", "Sol"], ["star"], 17, "the star that is the source of light and heat for the planets"),
    "planet": (["planet"], ["celestial_body"], 17, "a body that revolves around a star"),
    "earth": (["earth", "world", "globe"], ["planet"], 17, "the planet on which we live"),
    "mars": (["Mars", "Red_Planet"], ["planet"], 17, "the fourth planet from the sun"),
    "jupiter": (["Jupiter"], ["planet"], 17, "the largest planet"),
    "venus": (["Venus"], ["planet"], 17, "the second planet from the sun"),
    "saturn": (["Saturn"], ["planet"], 17, "a giant ringed planet"),
    "moon": (["moon"], ["celestial_body"], 17, "the natural satellite of the earth"),
    "comet": (["comet"], ["celestial_body"], 17, "a body with a luminous tail"),
    "asteroid": (["asteroid"], ["celestial_body"], 17, "a minor rocky body"),
    "layer": (["layer"], ["object"], 17, "a relatively thin sheetlike expanse"),
    "photosphere": (["photosphere"], ["layer"], 17, "the visible surface of the sun"),
    "surface": (["surface"], ["object"], 6, "the outer boundary of an object"),
    "artifact": (["artifact", "artefact"], ["object"], 6, "a man-made object"),
    "ball": (["ball"], ["artifact"], 6, "round object used in games"),
    "living_thing": (["living_thing", "animate_thing"], ["object"], 3, "a living entity"),
    "organism": (["organism", "being"], ["living_thing"], 3, "a living thing"),
    "animal": (["animal", "beast"], ["organism"], 5, "a living organism"),
    "mammal": (["mammal"], ["animal"], 5, "a warm-blooded vertebrate"),
    "dog": (["dog", "domestic_dog"], ["mammal"], 5, "a domesticated canine"),
    "cat": (["cat", "true_cat"], ["mammal"], 5, "a feline mammal"),
    "whale": (["whale"], ["mammal"], 5, "a large marine mammal"),
    "lion": (["lion"], ["mammal"], 5, "a large wild feline"),
    "horse": (["horse"], ["mammal"], 5, "a hoofed herbivorous mammal"),
    "bird": (["bird"], ["animal"], 5, "a warm-blooded egg-laying vertebrate"),
    "eagle": (["eagle"], ["bird"], 5, "a large bird of prey"),
    "owl": (["owl"], ["bird"], 5, "a nocturnal bird of prey"),
    "fish": (["fish"], ["animal"], 5, "a cold-blooded aquatic vertebrate"),
    "shark": (["shark"], ["fish"], 5, "a predatory marine fish"),
    "salmon": (["salmon"], ["fish"], 5, "a food fish of northern waters"),
    "plant": (["plant", "flora"], ["organism"], 20, "a living organism lacking locomotion"),
    "tree": (["tree"], ["plant"], 20, "a tall perennial woody plant"),
    "oak": (["oak"], ["tree"], 20, "a tree of the genus Quercus"),
    "pine": (["pine"], ["tree"], 20, "a coniferous tree"),
    "flower": (["flower"], ["plant"], 20, "a plant cultivated for its blooms"),
    "rose": (["rose"], ["flower"], 20, "a shrub with showy flowers"),
    "attribute": (["attribute"], ["abstraction"], 7, "an abstraction belonging to an entity"),
    "property": (["property"], ["attribute"], 7, "a basic quality"),
    "temperature": (["temperature"], ["property"], 7, "the degree of hotness or coldness"),
    "heat": (["heat", "warmth"], ["temperature"], 7, "the presence of heat"),
    "mass": (["mass"], ["property"], 7, "the property of a body that causes it to have weight"),
    "color": (["color", "colour"], ["property"], 7, "a visual attribute of things"),
    "size": (["size"], ["property"], 7, "the physical magnitude of something"),
    "light": (["light", "visible_light"], ["physical_entity"], 19, "electromagnetic radiation that can be seen"),
}

VERBS = {
    "act": (["act", "move"], [], 41, "perform an action"),
    "create": (["create", "make"], ["act"], 36, "make or cause to be"),
    "produce": (["produce", "make", "create"], ["create"], 36, "bring forth"),
    "know": (["know"], [], 31, "be cognizant or aware of a fact"),
    "travel": (["travel", "go", "move"], [], 38, "change location"),
    "revolve": (["revolve", "orbit", "circle"], ["travel"], 38, "move in an orbit"),
    "emit": (["emit", "give_off"], ["act"], 43, "give off, send forth"),
    "shine": (["shine", "beam"], ["emit"], 43, "emit light"),
    "burn": (["burn", "combust"], ["act"], 30, "undergo combustion"),
    "live": (["live", "dwell"], [], 42, "inhabit or live in"),
}

# name -> (lemmas, similar-to names, head?)
ADJS = {
    "large": (["large", "big"], ["huge", "giant"], True),
    "huge": (["huge", "immense", "vast"], ["large"], False),
    "giant": (["giant", "gigantic"], ["large"], False),
    "small": (["small", "little"], ["tiny"], True),
    "tiny": (["tiny", "bantam"], ["small"], False),
    "hot": (["hot"], ["warm"], True),
    "warm": (["warm"], ["hot"], False),
    "cold": (["cold"], ["cool", "icy"], True),
    "cool": (["cool"], ["cold"], False),
    "icy": (["icy", "frigid"], ["cold"], False),
    "bright": (["bright"], ["brilliant"], True),
    "brilliant": (["brilliant", "dazzling"], ["bright"], False),
    "red": (["red", "reddish"], [], True),
    "known": (["known"], [], True),
    "rocky": (["rocky", "stony"], [], True),
    "loyal": (["loyal", "faithful"], [], True),
}

ADVS = {
    "mainly": ["mainly", "chiefly", "principally", "primarily", "mostly"],
    "very": ["very", "really"],
    "quickly": ["quickly", "rapidly", "fast"],
    "slowly": ["slowly", "easy"],
}


def layout(entries, render):
    """Assigns byte offsets: the offset is part of the line, so iterate to a fixed point."""
    offsets = {name: 0 for name in entries}
    while True:
        text = HEADER
        new = {}
        for name in entries:
            new[name] = len(text.encode())
            text += render(name, offsets) + "\n"
        if new == offsets:
            return text, offsets
        offsets = new


def render_noun_like(table, pos, symbol_pos):
    def render(name, offsets):
        lemmas, parents, lexfile, gloss = table[name]
        words = " ".join(f"{w} 0" for w in lemmas)
        ptrs = [f"@ {offsets[p]:08d} {symbol_pos} 0000" for p in parents]
        ptrs += [f"~ {offsets[c]:08d} {symbol_pos} 0000" for c, v in table.items() if name in v[1]]
        frames = " 01 + 02 00" if pos == "v" else ""
        return (f"{offsets[name]:08d} {lexfile:02d} {pos} {len(lemmas):02x} {words} "
                f"{len(ptrs):03d}{' ' if ptrs else ''}{' '.join(ptrs)}{frames} | {gloss}")
    return render


def render_adj(name, offsets):
    lemmas, similar, head = ADJS[name]
    words = " ".join(f"{w} 0" for w in lemmas)
    ptrs = [f"& {offsets[s]:08d} {'s' if not ADJS[s][2] else 'a'} 0000" for s in similar]
    return (f"{offsets[name]:08d} 00 {'a' if head else 's'} {len(lemmas):02x} {words} "
            f"{len(ptrs):03d}{' ' if ptrs else ''}{' '.join(ptrs)} | {name}")


def render_adv(name, offsets):
    lemmas = ADVS[name]
    words = " ".join(f"{w} 0" for w in lemmas)
    return f"{offsets[name]:08d} 02 r {len(lemmas):02x} {words} 000 | {name}"


def index(entries, lemmas_of, pos, offsets):
    by_lemma = {}
    for name in entries:
        for lemma in lemmas_of(name):
            by_lemma.setdefault(lemma.lower(), []).append(offsets[name])
    lines = [HEADER.rstrip("\n")]
    for lemma in sorted(by_lemma):
        offs = by_lemma[lemma]
        lines.append(f"{lemma} {pos} {len(offs)} 0 {len(offs)} 0 " + " ".join(f"{o:08d}" for o in offs) + " ")
    return "\n".join(lines) + "\n"


def main(out_dir):
    os.makedirs(out_dir, exist_ok=True)
    parts = [
        ("noun", "n", NOUNS, render_noun_like(NOUNS, "n", "n"), lambda n: NOUNS[n][0]),
        ("verb", "v", VERBS, render_noun_like(VERBS, "v", "v"), lambda n: VERBS[n][0]),
        ("adj", "a", ADJS, render_adj, lambda n: ADJS[n][0]),
        ("adv", "r", ADVS, render_adv, lambda n: ADVS[n]),
    ]
    for suffix, pos, table, render, lemmas_of in parts:
        text, offsets = layout(list(table), render)
        with open(os.path.join(out_dir, f"data.{suffix}"), "w") as f:
            f.write(text)
        with open(os.path.join(out_dir, f"index.{suffix}"), "w") as f:
            f.write(index(list(table), lemmas_of, pos, offsets))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data", "wordnet-mini"))
