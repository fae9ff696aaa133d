#ifndef KCERT_FITTINGS_INDEX_HPP
#define KCERT_FITTINGS_INDEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

namespace kcert::fittings {

// Address of a subformula occurrence of the theorem, as used by both tableau
// certificate formats: eind is the root, lind/rind descend into the left and
// right operand (and into the body of a quantifier via lind), and bind(I, O)
// names the instance of the quantifier at I by the eigenvariable of O. none
// carries no information and labels every stored relational atom.
class FitIndex {
 public:
  enum class Kind : std::uint8_t { Eind, None, Lind, Rind, Bind };

  FitIndex() : FitIndex(eind()) {}
  static FitIndex eind();
  static FitIndex none();
  static FitIndex lind(FitIndex i);
  static FitIndex rind(FitIndex i);
  static FitIndex bind(FitIndex i, FitIndex o);

  [[nodiscard]] Kind kind() const noexcept;
  // Pre: kind() is Lind, Rind or Bind.
  [[nodiscard]] const FitIndex& first() const noexcept;
  // Pre: kind() == Bind.
  [[nodiscard]] const FitIndex& second() const noexcept;
  [[nodiscard]] std::size_t hash() const noexcept;
  [[nodiscard]] std::size_t size() const noexcept;

  friend bool operator==(const FitIndex& a, const FitIndex& b) noexcept;
  friend std::strong_ordering operator<=>(const FitIndex& a, const FitIndex& b) noexcept;

 private:
  struct Node;
  explicit FitIndex(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FitIndex::Node {
  Kind kind;
  std::size_t hash;
  std::size_t size;
  FitIndex first{nullptr};
  FitIndex second{nullptr};
};

inline FitIndex::Kind FitIndex::kind() const noexcept { return node_->kind; }
inline const FitIndex& FitIndex::first() const noexcept { return node_->first; }
inline const FitIndex& FitIndex::second() const noexcept { return node_->second; }
inline std::size_t FitIndex::hash() const noexcept { return node_->hash; }
inline std::size_t FitIndex::size() const noexcept { return node_->size; }

// Index grammar: eind | none | (lind i) | (rind i) | (bind i j).
std::string to_string(const FitIndex& i);

}  // namespace kcert::fittings

template <>
struct std::hash<kcert::fittings::FitIndex> {
  std::size_t operator()(const kcert::fittings::FitIndex& i) const noexcept { return i.hash(); }
};

#endif  // KCERT_FITTINGS_INDEX_HPP
