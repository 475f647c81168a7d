import java.sql.*;

class CountStar {
    int countUsers(Connection connection) throws SQLException {
        // Wrong type of getter, result of count(*) is BIGINT
        String sql = "select count(*) from USERS";
        PreparedStatement ps = connection.prepareStatement(sql);
        ResultSet resultSet = ps.executeQuery();
        resultSet.next();
        int result = resultSet.getInt(1);
        return result;
    }
}
