import logging
from pathlib import Path

from jinja2 import Environment, PackageLoader, select_autoescape

from triangle_moduli.exceptions import EmptyTileListError
from triangle_moduli.modular_group import format_matrix
from triangle_moduli.s3_action import RegionColor, region_of
from triangle_moduli.tiling import Shade, Viewport, t_region_arcs

TEMPLATE_NAME = 'tiling.svg.j2'

DEFAULT_STYLE = {
    'background': '#ffffff',
    'light': '#e4e4e4',
    'dark': '#9c9c9c',
    'edge': '#303030',
    'edge_width': '0.8',
    'yellow': '#f4d03f',
    'purple': '#9b59b6',
    'overlay_opacity': '0.85',
    'axis': '#000000',
    'font_size': '14',
}

TICKS = ((-1.0, '-1'), (-0.5, '-1/2'), (0.0, '0'), (0.5, '1/2'), (1.0, '1'))

_environment = Environment(
    loader=PackageLoader('triangle_moduli', 'templates'),
    autoescape=select_autoescape(['svg', 'xml', 'j2']),
    keep_trailing_newline=True,
    trim_blocks=True,
    lstrip_blocks=True,
)


class TilingRenderer:
    def __init__(self, viewport=None, style=None):
        """Initialize the renderer for one viewport and color table."""
        self.viewport = viewport or Viewport()
        self.style = dict(DEFAULT_STYLE, **(style or {}))

    def render(self, tiles, overlay_t=False):
        """
        Lay out tiles (and optionally the regions of T) as an SVG document.

        Args:
            tiles (list): Tiles from enumerate_tiles, already in emission order
            overlay_t (bool): Draw the six yellow and purple regions of T on top

        Returns:
            str: Standalone SVG 1.1 text, identical for identical input
        """
        if not tiles:
            raise EmptyTileListError('Nothing to render: the tile list is empty')
        vp = self.viewport
        context = {
            'width': vp.width_px,
            'height': vp.height_px,
            'style': self.style,
            'tiles': [self._tile_entry(tile) for tile in tiles],
            'regions': [self._region_entry(region) for region in t_region_arcs()] if overlay_t else [],
            'ticks': self._ticks(),
        }
        document = _environment.get_template(TEMPLATE_NAME).render(**context)
        logging.debug(f"Rendered {len(tiles)} tiles, overlay {'on' if overlay_t else 'off'}")
        return document

    def _tile_entry(self, tile):
        fill = self.style['light'] if tile.shade is Shade.LIGHT else self.style['dark']
        return {
            'shade': tile.shade.value,
            'element': format_matrix(tile.element),
            'depth': tile.depth,
            'fill': fill,
            'd': self.path_data(tile.boundary),
        }

    def _region_entry(self, region):
        region_id = region_of(region.sample)
        fill = self.style['yellow'] if region_id.color is RegionColor.YELLOW else self.style['purple']
        return {
            'color': region_id.color.value.lower(),
            'ordering': str(region_id.ordering),
            'fill': fill,
            'd': self.path_data(region.boundary),
        }

    def _ticks(self):
        vp = self.viewport
        ticks = []
        for x, label in TICKS:
            if not vp.x_min <= x <= vp.x_max:
                continue
            px, _ = vp.to_pixel(complex(x, vp.y_max))
            ticks.append({
                'x': self.fmt(px),
                'top': self.fmt(vp.height_px - 8),
                'label_y': self.fmt(vp.height_px - 12),
                'label': label,
            })
        return ticks

    def fmt(self, value):
        """Fixed-precision coordinate with negative zero printed unsigned."""
        text = f"{value:.{self.viewport.precision}f}"
        if text.startswith('-') and not text.strip('-0.'):
            text = text[1:]
        return text

    def _point(self, z):
        px, py = self.viewport.to_pixel(z)
        return f"{self.fmt(px)} {self.fmt(py)}"

    def _clip(self, vertex, neighbour):
        # the point at infinity is drawn at the top edge, above its finite neighbour
        if vertex is not None:
            return vertex
        return complex(neighbour.real, max(self.viewport.y_max, neighbour.imag))

    def path_data(self, boundary):
        """SVG path for a closed chain of geodesic arcs."""
        vp = self.viewport
        first = boundary[0]
        commands = [f"M {self._point(self._clip(first.start, first.end))}"]
        for arc in boundary:
            start = self._clip(arc.start, arc.end)
            end = self._clip(arc.end, arc.start)
            if arc.circline.is_line:
                commands.append(f"L {self._point(end)}")
                continue
            radius = arc.circline.radius
            sweep = 1 if end.real > start.real else 0
            commands.append(
                f"A {self.fmt(radius * vp.scale_x)} {self.fmt(radius * vp.scale_y)} 0 0 {sweep} {self._point(end)}"
            )
        commands.append('Z')
        return ' '.join(commands)


def render_svg(tiles, vp=None, overlay_T=False):
    return TilingRenderer(vp).render(tiles, overlay_t=overlay_T)


def write_svg(path, document):
    path = Path(path)
    path.write_text(document, encoding='utf-8', newline='\n')
    logging.info(f"Wrote {len(document)} characters of SVG to {path}")
    return path
