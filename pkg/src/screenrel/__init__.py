"""screenrel: relation embeddings for screenplay-style dialogue corpora.

Parses <SPEAKER: utterance> scripts into relation statements, trains a small
transformer encoder with a matched-pair contrastive loss (optionally extended
with an inverse-relationship term for reversed speaker pairs), and evaluates
the resulting embeddings with cosine-distance silhouette scores against
ground-truth relationship clusters.
"""

__version__ = "0.1.0"
