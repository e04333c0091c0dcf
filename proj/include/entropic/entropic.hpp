#pragma once

#include "entropic/fluctuations.hpp"
#include "entropic/gravity.hpp"
#include "entropic/gravity_io.hpp"
#include "entropic/hpicture.hpp"
#include "entropic/onsager.hpp"
#include "entropic/onsager_io.hpp"
#include "entropic/opcore.hpp"
#include "entropic/spicture.hpp"
#include "entropic/symplectic.hpp"
