"""Border arrays, strict border arrays, and moving between them.

The border array pi of a word stores, for each prefix, the length of its
longest border (a proper prefix that is also a suffix).  The strict variant
pi' keeps only borders whose following symbol differs from the next symbol
of the word; it is what the KMP algorithm actually consults.
"""

from borderval import (
    compute_pi,
    naive_pi,
    naive_pi_prime,
    pi_prime_to_pi,
    pi_to_pi_prime,
    text_to_word,
    word_to_text,
)

word = text_to_word("aabaabaaabaac")
print("word          :", word_to_text(word))

pi = compute_pi(word)
print("pi            :", pi)
print("pi (naive)    :", naive_pi(word), "(definition-level cross-check)")

# pi and pi' determine each other without looking at the word at all
pp = pi_to_pi_prime(pi)
print("pi'           :", pp)
print("pi' (naive)   :", naive_pi_prime(word))
print("round trip    :", pi_prime_to_pi(pp) == pi)

# -1 marks positions where no border survives the strictness test
print("\nstrict values of a run of equal letters:")
print("pi'(aaaa)     :", naive_pi_prime(text_to_word("aaaa")))
