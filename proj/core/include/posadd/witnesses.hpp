#pragma once

#include "posadd/nfa.hpp"

namespace posadd {

// Generators for the worst-case operand automata. All of them are partial
// DFAs with canonical languages (digit 0 is never used).

/// m-state counter over digits {1, 2, k-1}: digit 1 advances the counter
/// modulo m, digits 2 and k-1 self-loop; accepts words whose number of 1s is
/// m-1 modulo m. Requires k >= 9, m >= 1.
Nfa witness_a(int k, int m);

/// n-state counter over digits {1, 3, k-1}: digits 1 and k-1 advance the
/// counter modulo n, digit 3 self-loops; accepts words whose total count of
/// 1s and (k-1)s is n-1 modulo n. Requires k >= 9, n >= 1.
Nfa witness_b(int k, int n);

/// m-state cycle on digit 1 accepting (1^m)^*. Requires k >= 2, m >= 1.
Nfa unary_witness(int k, int m);

/// Single accepting state with self-loops on {2, k-1}: accepts {2, k-1}^*.
/// Requires k >= 9.
Nfa one_state_witness_a(int k);

/// Single accepting state with self-loops on {3, k-1}: accepts {3, k-1}^*.
/// Requires k >= 9.
Nfa one_state_witness_b(int k);

}  // namespace posadd
