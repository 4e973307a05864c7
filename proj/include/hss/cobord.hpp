#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hss/action.hpp"
#include "hss/algebra.hpp"
#include "hss/group.hpp"

namespace hss {

/// Object of the cobordism category: a word over {+, -}, one character per
/// circle, "" for the empty boundary.
using Signature = std::string;

enum class Gen {
  Pants,    // ++ -> +
  Copants,  // +  -> ++
  Unit,     // "" -> +
  Counit,   // +  -> ""
  Form,     // ++ -> ""
  Coform,   // "" -> ++
  Eta,      // "" -> +-
  Eps,      // -+ -> ""
  Swap,     // ab -> ba
  Flip,     // +  -> -
  Unflip,   // -  -> +
  Twist,    // +  -> +   (carries a group element)
  Id,       // a  -> a
};

struct Word;
using WordPtr = std::shared_ptr<const Word>;

struct Word {
  enum class Kind { Generator, Compose, Tensor };
  Kind kind = Kind::Generator;

  // Kind::Generator
  Gen gen = Gen::Id;
  std::vector<long> twist_residues;  // Twist
  Signature sig_a, sig_b;            // Swap: (a, b); Id: a

  // Kind::Compose / Kind::Tensor (diagrammatic order: lhs first)
  WordPtr lhs, rhs;

  std::size_t pos = 0;  // source position, when parsed from text
};

WordPtr make_gen(Gen g);
WordPtr make_twist(std::vector<long> residues);
WordPtr make_swap(Signature a, Signature b);
WordPtr make_id(Signature a);
WordPtr make_compose(WordPtr pipeline_first, WordPtr then);
WordPtr make_tensor(WordPtr left, WordPtr right);

std::string to_string(const WordPtr& word);

/// Grammar: expr := term (";" term)*; term := factor ("*" factor)*;
/// factor := generator | "(" expr ")". ";" composes in diagrammatic order,
/// "*" tensors. twist takes a bracketed residue list; swap and id take
/// orientation arguments. Parsing is type-free.
WordPtr parse(const std::string& text);

/// Domain and codomain signatures; TypeMismatch names the offending subterm
/// and the two signatures.
std::pair<Signature, Signature> typecheck(const WordPtr& word);

/// The matrix of the word: + is A with its basis, - the dual space with the
/// dual basis; a morphism with |domain| = m and |codomain| = n strands is a
/// d^n x d^m matrix. Composition is reversed matrix product; tensor is the
/// Kronecker product with the leftmost strand most significant.
Matrix evaluate_word(const WordPtr& word, const Algebra& alg,
                     const GAction& action);

/// "unit ; (copants ; pants)^h ; twist(g) ; counit".
WordPtr closed_genus_word(int h, const GroupElement& g);

}  // namespace hss
