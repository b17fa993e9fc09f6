# aspecis, a model weaving toolbox for cooperative requirements.
#
# This file is part of aspecis.
#
# aspecis is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 3 as
# published by the Free Software Foundation.
#
# aspecis is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with aspecis. If not, see <http://www.gnu.org/licenses/>.

from .instance import Element, ModelInstance, Ref, SlotValue
from .instance import parse_model, parse_model_file, canonical_serialize, write_model_file, structurally_equal, to_document
from .registry import register_metamodel, get_metamodel
from .identity import ModelIndex, index_of, element_id, resolve_id, parent_of, children_of
from .conformance import check_conformance, primitive_matches
from . import reflection
