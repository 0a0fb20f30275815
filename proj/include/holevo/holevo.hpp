#pragma once

#include "holevo/bounds.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/entropy.hpp"
#include "holevo/errors.hpp"
#include "holevo/gallery.hpp"
#include "holevo/linalg.hpp"
#include "holevo/tolerances.hpp"
