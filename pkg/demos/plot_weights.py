"""
Distinct weight pairs with a common sum
=======================================
"""

from oddrep.reptheory import select_ht_weights

for n, s in [(1, 0), (3, 5), (3, -4), (4, -6)]:
    print(n, s, select_ht_weights(n, s).pairs)
