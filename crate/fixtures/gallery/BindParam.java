import java.sql.*;

class BindParam {
    public void bindParam(PreparedStatement ps,
        int parameterIndex, String value) throws SQLException {
        ps.setString(parameterIndex, value);
    }
}
