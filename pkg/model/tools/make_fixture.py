"""Generate the bundled synthetic training fixture.

Writes src/sentiwave/data/train_fixture.csv: short tweet-like lines with
ten sentiment columns plus an extra binary column the loader must drop.
Everything is template-generated; no real dataset rows are copied. The
seed is fixed so the committed file is reproducible with a bare rerun.
"""
import csv
import random
from pathlib import Path

LABELS = [
    "optimistic",
    "thankful",
    "empathetic",
    "pessimistic",
    "anxious",
    "sad",
    "annoyed",
    "denial",
    "surprise",
    "joking",
]

# distinctive vocabulary per label so a bag-of-words learner has signal
WORDS = {
    "optimistic": ["hopeful", "better days", "brighter", "improving", "we will recover", "looking up"],
    "thankful": ["grateful", "thank you", "thanks a lot", "appreciate", "gratitude", "so thankful"],
    "empathetic": ["my heart goes out", "thinking of you", "stay strong", "we care", "sending love", "feel for everyone"],
    "pessimistic": ["doomed", "only getting worse", "no way out", "downhill", "pointless", "ruined"],
    "anxious": ["worried sick", "so scared", "anxiety is high", "panicking", "afraid", "on edge"],
    "sad": ["heartbroken", "crying", "miss my friends", "so sad", "in tears", "lonely"],
    "annoyed": ["fed up", "so annoying", "sick of this", "ridiculous", "stop it already", "ugh"],
    "denial": ["total hoax", "fake news", "overblown", "not real", "they are lying", "nothing is happening"],
    "surprise": ["cannot believe", "unbelievable", "what a shock", "stunned", "out of nowhere", "wow"],
    "joking": ["lol", "lmao", "what a meme", "haha classic", "comedy gold", "the joke writes itself"],
}

TEMPLATES = [
    "{} about the whole situation today",
    "honestly {} right now",
    "{} after reading the news this morning",
    "everyone around here is {}",
    "day twelve and {} again",
    "{} but trying to keep busy",
    "status update: {}",
    "me at 3am: {}",
    "my neighbour said {} and I get it",
    "week after week it is {}",
]

PAIRS = [
    ("sad", "empathetic"),
    ("anxious", "pessimistic"),
    ("annoyed", "joking"),
    ("optimistic", "thankful"),
    ("surprise", "joking"),
    ("sad", "anxious"),
    ("denial", "annoyed"),
    ("optimistic", "empathetic"),
]


def rows(rng):
    out = []
    for label in LABELS:
        for i in range(36):
            phrase = rng.choice(WORDS[label])
            text = rng.choice(TEMPLATES).format(phrase)
            if i % 3 == 0:
                text += " " + rng.choice(WORDS[label])
            out.append((text, {label}))
    for a, b in PAIRS:
        for _ in range(9):
            text = rng.choice(TEMPLATES).format(
                rng.choice(WORDS[a]) + " and " + rng.choice(WORDS[b])
            )
            out.append((text, {a, b}))
    rng.shuffle(out)
    return out


def main():
    rng = random.Random(20260819)
    path = Path(__file__).resolve().parents[1] / "src" / "sentiwave" / "data" / "train_fixture.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["text"] + LABELS + ["official report"])
        for text, labels in rows(rng):
            flags = [1 if name in labels else 0 for name in LABELS]
            # the extra column carries noise; the loader must ignore it
            writer.writerow([text] + flags + [1 if rng.random() < 0.1 else 0])
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
