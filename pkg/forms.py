from wtforms import BooleanField, Form, IntegerField, SelectField, StringField
from wtforms.validators import InputRequired, NumberRange, Optional

from triangle_moduli.exceptions import MalformedLiteral
from triangle_moduli.geometry import parse_complex
from triangle_moduli.modular_group import is_matrix_literal


class ComplexField(StringField):
    """A complex literal such as "0.5+0.8i"."""

    def process_formdata(self, valuelist):
        if valuelist:
            self.data = parse_complex(valuelist[0])


class MatrixField(StringField):
    """A matrix literal "[[a,b],[c,d]]" or a word over S, T, t, R; kept as text until use."""

    def process_formdata(self, valuelist):
        if valuelist:
            if not is_matrix_literal(valuelist[0]):
                raise MalformedLiteral(valuelist[0], 'a matrix literal "[[a,b],[c,d]]" or a word over S, T, t, R')
            self.data = valuelist[0].strip()


class ViewportField(StringField):
    """Four comma-separated numbers xmin,xmax,ymin,ymax."""

    def process_formdata(self, valuelist):
        if valuelist:
            parts = valuelist[0].split(',')
            try:
                bounds = tuple(float(part) for part in parts)
            except ValueError:
                raise MalformedLiteral(valuelist[0], 'four numbers "xmin,xmax,ymin,ymax"')
            if len(bounds) != 4:
                raise MalformedLiteral(valuelist[0], 'four numbers "xmin,xmax,ymin,ymax"')
            self.data = bounds


class SizeField(StringField):
    """Pixel size written WxH."""

    def process_formdata(self, valuelist):
        if valuelist:
            width, sep, height = valuelist[0].lower().partition('x')
            if not (sep and width.isdigit() and height.isdigit()):
                raise MalformedLiteral(valuelist[0], 'a pixel size such as "880x860"')
            self.data = (int(width), int(height))


class TriangleForm(Form):
    v1 = ComplexField('First vertex', validators=[InputRequired()])
    v2 = ComplexField('Second vertex', validators=[InputRequired()])
    v3 = ComplexField('Third vertex', validators=[InputRequired()])


class CurveForm(TriangleForm):
    edge = SelectField('Edge', choices=[('E12', 'E12'), ('E13', 'E13'), ('E23', 'E23')], default='E12')
    force_obtuse = BooleanField('Accept obtuse triangles')


class PointForm(Form):
    z = ComplexField('Point', validators=[InputRequired()])


class ReduceForm(PointForm):
    gl = BooleanField('Reduce for GL(2,Z)')


class PairForm(Form):
    z1 = ComplexField('First point', validators=[InputRequired()])
    z2 = ComplexField('Second point', validators=[InputRequired()])
    gl = BooleanField('Compare up to GL(2,Z)')


class ActForm(PointForm):
    matrix = MatrixField('Matrix', validators=[InputRequired()])


class RenderForm(Form):
    depth = IntegerField('Depth', validators=[InputRequired(), NumberRange(min=0)])
    out = StringField('Output file', validators=[InputRequired()])
    overlay_t = BooleanField('Overlay the regions of T')
    viewport = ViewportField('Viewport', validators=[Optional()])
    size = SizeField('Size', validators=[Optional()])
    precision = IntegerField('Precision', validators=[Optional(), NumberRange(min=0, max=12)])


FORMS = {
    'classify': TriangleForm,
    'normalize': TriangleForm,
    'angles': TriangleForm,
    'curve': CurveForm,
    'orbit': PointForm,
    'fiber': PointForm,
    'section': PointForm,
    'region': PointForm,
    'canonical': PointForm,
    'reduce': ReduceForm,
    'equiv': PairForm,
    'act': ActForm,
    'render': RenderForm,
}
