#pragma once

// Finite quantum logics: composite state words over elementary labels and
// their conjugates, a directed orthogonality relation, conjugation, logic
// morphisms, the symmetric-group action on words, and representation inside
// a graded Fock space where orthogonality is read as a vanishing Gram
// pairing.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fockforge/fock.hpp"
#include "fockforge/report.hpp"
#include "fockforge/tensor_core.hpp"

namespace fockforge {

// letters are nonzero: i stands for the elementary state i, -i for its
// conjugate *i; the empty word is the neutral state
struct Word {
  std::vector<int> letters;

  // drops zero labels: an interior empty placeholder is absorbed
  static Word from_labels(const std::vector<int>& labels);

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  bool all_positive() const;
  bool all_negative() const;
  std::string str() const;

  bool operator==(const Word& other) const { return letters == other.letters; }
};

// reverse the word and conjugate every letter
Word star(const Word& w);

// letter k of the result is letter pi^-1(k) of sigma
Word symmetric_action(const Permutation& pi, const Word& sigma);

struct QuantumLogic {
  int ambient = 0;              // elementary labels 1..ambient
  std::vector<Word> words;
  std::vector<std::pair<std::size_t, std::size_t>> ortho;  // directed index pairs
};

// the example logic on words up to max_length: elementary orthogonality
// {*i} _|_ {j} for i != j, and within every length >= 2 all distinct
// same-sign words orthogonal in enumeration order
QuantumLogic canonical_logic(int ambient, int max_length);

// anti-reflexivity, transitivity (checked literally and exhaustively),
// conjugation closure of the word set, label disjointness sigma and *sigma,
// elementary orthogonality; failures carry the first counterexample
std::vector<CheckResult> check_logic(const QuantumLogic& l);

struct LogicMorphism {
  QuantumLogic source;
  QuantumLogic target;
  std::vector<std::size_t> map;  // source word index -> target word index
};

// f(empty) = empty, f(*sigma) = *f(sigma), orthogonal pairs map to
// orthogonal pairs
std::vector<CheckResult> check_morphism(const LogicMorphism& f);

struct WordState {
  Word word;
  int level = 0;
  bool dual = false;  // conjugate words represent functionals
  Vector state;       // quotient coordinates at the word's level
};

struct PairingEntry {
  std::size_t a = 0;  // indices into the logic's word list
  std::size_t b = 0;
  Complex value{};
};

struct RepresentResult {
  std::vector<WordState> states;
  std::vector<PairingEntry> pairings;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool pass() const;
};

// maps the empty word to the vacuum, positive words to their state words,
// conjugate words to the functional of the conjugated word; reports the Gram
// pairing of every declared orthogonal pair and, when the braid
// representation is defined, the equivariance of the symmetric-group action;
// rejects mixed-sign words
RepresentResult represent(const QuantumLogic& l, const GradedFockSpace& f,
                          double tol = kDefaultCheckTol);

}  // namespace fockforge
