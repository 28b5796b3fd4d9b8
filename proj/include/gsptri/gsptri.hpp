#pragma once

#include "gsptri/error.hpp"
#include "gsptri/config.hpp"
#include "gsptri/exact/rational.hpp"
#include "gsptri/exact/laurent.hpp"
#include "gsptri/exact/fraction.hpp"
#include "gsptri/exact/matrix.hpp"
#include "gsptri/exact/linalg.hpp"
#include "gsptri/io/rng.hpp"
#include "gsptri/weyl/permutation.hpp"
#include "gsptri/weyl/symplectic.hpp"
#include "gsptri/weyl/weyl_group.hpp"
#include "gsptri/characters/character.hpp"
#include "gsptri/characters/dominance.hpp"
#include "gsptri/characters/phi_module.hpp"
#include "gsptri/saturation/frame.hpp"
#include "gsptri/saturation/certificate.hpp"
#include "gsptri/io/json_io.hpp"
#include "gsptri/cli/commands.hpp"
