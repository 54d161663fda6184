#pragma once

#include "coxcent/arrows.hpp"
#include "coxcent/blowup.hpp"
#include "coxcent/brute_force.hpp"
#include "coxcent/builtins.hpp"
#include "coxcent/centralizer.hpp"
#include "coxcent/diagram.hpp"
#include "coxcent/error.hpp"
#include "coxcent/io.hpp"
#include "coxcent/isomorphism.hpp"
#include "coxcent/odd_components.hpp"
#include "coxcent/spherical.hpp"
#include "coxcent/tits.hpp"
#include "coxcent/words.hpp"
