#pragma once

#include "mobius/certify.hpp"
#include "mobius/counterexamples.hpp"
#include "mobius/element_key.hpp"
#include "mobius/errors.hpp"
#include "mobius/families.hpp"
#include "mobius/finite_field.hpp"
#include "mobius/finite_poset.hpp"
#include "mobius/poset_core.hpp"
#include "mobius/poset_view.hpp"
#include "mobius/properties.hpp"
#include "mobius/qbinomial.hpp"
#include "mobius/rational.hpp"
#include "mobius/reduced.hpp"
#include "mobius/reduced_checks.hpp"
#include "mobius/rref.hpp"
#include "mobius/zoo.hpp"
