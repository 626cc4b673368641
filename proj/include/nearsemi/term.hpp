#pragma once

// Terms over the signature (+, ., alpha, 0, 1) and exhaustive identity
// checking. Every quoted identity in the workbench is written as a Term pair
// and evaluated on all variable assignments.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nearsemi/algebra.hpp"

namespace nearsemi {

  class UnboundVariable : public std::runtime_error {
   public:
    explicit UnboundVariable(std::string var)
        : std::runtime_error("unbound variable '" + var + "'"), variable(std::move(var)) {}
    std::string variable;
  };

  class Term {
   public:
    enum class Kind { variable, zero, one, plus, times, alpha };

    static Term var(std::string name);
    static Term zero();
    static Term one();

    Kind kind() const noexcept {
      return node_->kind;
    }
    std::string const& name() const noexcept {
      return node_->name;
    }
    Term const& left() const {
      return node_->children.at(0);
    }
    Term const& right() const {
      return node_->children.at(1);
    }

    //! Distinct variable names, sorted.
    std::vector<std::string> variables() const;

    std::string to_string() const;

    friend Term operator+(Term const& a, Term const& b);
    friend Term operator*(Term const& a, Term const& b);
    friend Term alpha(Term const& a);

   private:
    struct Node {
      Kind              kind;
      std::string       name;
      std::vector<Term> children;
    };
    explicit Term(std::shared_ptr<Node const> node) : node_(std::move(node)) {}
    static Term make(Kind k, std::string name, std::vector<Term> children);

    std::shared_ptr<Node const> node_;
  };

  Term operator+(Term const& a, Term const& b);
  Term operator*(Term const& a, Term const& b);
  Term alpha(Term const& a);

  using Environment = std::map<std::string, Element>;

  //! Structural evaluation over the tables. Throws UnboundVariable.
  Element eval_term(FiniteAlgebra const& alg, Term const& t, Environment const& env);

  //! A term flattened into postfix code over numbered variables, for the
  //! tight loops of exhaustive identity checks.
  class CompiledTerm {
   public:
    CompiledTerm(Term const& t, std::vector<std::string> const& variable_order);

    Element eval(FiniteAlgebra const& alg, std::span<Element const> values) const;

   private:
    struct Op {
      Term::Kind kind;
      unsigned   var;
    };
    std::vector<Op> code_;
    std::size_t     depth_;
  };

  struct Identity {
    std::string id;
    Term        lhs;
    Term        rhs;
  };

  struct IdentityWitness {
    std::vector<std::pair<std::string, Element>> assignment;
    Element                                      lhs;
    Element                                      rhs;

    std::string describe(FiniteAlgebra const& alg) const;
  };

  //! Scans all assignments of the identity's variables (first variable
  //! varying fastest) and returns the first failing one.
  std::optional<IdentityWitness> check_identity(FiniteAlgebra const& alg, Identity const& id);

  //! Named terms and identities used across modules.
  namespace terms {
    Term x();
    Term y();
    Term z();

    //! q(x, y, z) = (x . y) + (x^alpha . z)
    Term church_q(Term const& x, Term const& y, Term const& z);

    //! p(x, y, z) = (((x . y^a)^a . z^a) + ((z . y^a)^a . x^a))^a
    Term malcev(Term const& x, Term const& y, Term const& z);

    //! s(x, y) = x^alpha . y
    Term gumm_ursini(Term const& x, Term const& y);
  }  // namespace terms

}  // namespace nearsemi
