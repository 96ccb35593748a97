#include "hallmark/verdict.hpp"

namespace hallmark {

const char* toString(Outcome o) noexcept
{
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Undetermined: return "undetermined";
  }
  return "?";
}

const char* toString(Provenance p) noexcept
{
  switch (p) {
    case Provenance::Criterion: return "criterion";
    case Provenance::Oracle: return "oracle";
    case Provenance::Table: return "table";
  }
  return "?";
}

}  // namespace hallmark
