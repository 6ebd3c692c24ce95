#ifndef GHYPER_GHYPER_HPP_
#define GHYPER_GHYPER_HPP_

#include "bits.hpp"
#include "classify.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "groupoid.hpp"
#include "hyperspace.hpp"
#include "product.hpp"
#include "reference.hpp"
#include "structure.hpp"
#include "text.hpp"

#endif  // GHYPER_GHYPER_HPP_
